#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "scoring/game.hpp"
#include "scoring/operators.hpp"
#include "scoring/score.hpp"

namespace scoring {

/// Octal heap ruleset. Digit k (1-based) governs removing k beans: bit 0 lets
/// the mover take the whole heap, bit 1 leave one heap, bit 2 leave two
/// heaps. Removing k beans earns points[k-1].
struct OctalRuleset {
  std::vector<std::uint8_t> digits;
  std::vector<Score> points;

  /// Throws std::invalid_argument unless lengths match, every digit is in
  /// 0..7 and at least one digit is nonzero.
  void validate() const;

  bool allows_split() const;

  /// 2k where k is the largest index whose digit is not 0 or 1; empty when
  /// every digit is 0 or 1.
  std::optional<std::size_t> reference_period() const;

  /// Points for digits without an explicit list: p_i = i when digit i is
  /// 1, 2 or 3, otherwise 0.
  static std::vector<Score> default_points(const std::vector<std::uint8_t>& digits);

  friend bool operator==(const OctalRuleset&, const OctalRuleset&) = default;
};

struct HeapMove {
  Score points;
  std::vector<std::uint32_t> remainder;  // 0, 1 or 2 heap sizes, all >= 1

  friend bool operator==(const HeapMove&, const HeapMove&) = default;
};

/// Legal moves on one heap of size n. Zero-size heaps are never emitted;
/// split remainders are unordered pairs a <= b.
std::vector<HeapMove> heap_moves(const OctalRuleset& rules, std::uint32_t n);

/// Handle into the process-wide ruleset registry.
struct RulesetId {
  std::uint32_t value = 0;
  friend auto operator<=>(const RulesetId&, const RulesetId&) = default;
};

RulesetId intern_ruleset(const OctalRuleset& rules);
const OctalRuleset& ruleset(RulesetId id);

struct Heap {
  RulesetId rules;
  std::uint32_t size = 0;
  friend auto operator<=>(const Heap&, const Heap&) = default;
};

/// Multiset of heaps for the commutative operators. Empty heaps are dropped on
/// construction and the rest kept sorted.
class Position {
 public:
  Position() = default;
  Position(std::vector<Heap> heaps);  // NOLINT: a heap list is a position
  static Position of(RulesetId rules, std::initializer_list<std::uint32_t> sizes);

  const std::vector<Heap>& heaps() const { return heaps_; }
  bool empty() const { return heaps_.empty(); }
  Position with(Heap heap) const;

  friend bool operator==(const Position&, const Position&) = default;

 private:
  std::vector<Heap> heaps_;
};

/// Ordered heaps for the sequential join; empty heaps are dropped.
class SeqPosition {
 public:
  SeqPosition() = default;
  SeqPosition(std::vector<Heap> heaps);  // NOLINT
  static SeqPosition of(RulesetId rules, std::initializer_list<std::uint32_t> sizes);

  const std::vector<Heap>& heaps() const { return heaps_; }

 private:
  std::vector<Heap> heaps_;
};

class GsBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic work limits for one solver. Splitting rulesets under the
/// conjunctive and selective sums grow exponentially in the number of heaps,
/// so both the memo size and the number of enumerated move combinations are
/// capped. SCORING_GS_STATE_BUDGET and SCORING_GS_WORK_BUDGET override the
/// defaults.
struct GsLimits {
  std::size_t states = 4'000'000;
  std::size_t work = 20'000'000;

  static GsLimits from_env();
};

/// Memoised scoring Sprague-Grundy values for one operator. Not thread-safe;
/// use one solver per thread.
///
/// Dead heaps (no legal move) and empty heaps are removed from every position
/// before lookup: they never move again under any operator. A position where
/// the mover has no combined move is worth 0. Sequential positions only allow
/// play in their first heap; splitting rulesets are rejected there.
class GsSolver {
 public:
  explicit GsSolver(OperatorKind op, GsLimits limits = GsLimits::from_env());

  OperatorKind op() const { return op_; }

  /// For Disjunctive, Conjunctive and Selective.
  Score value(const Position& pos);
  /// For Sequential. Throws std::invalid_argument for splitting rulesets.
  Score value(const SeqPosition& pos);

  std::size_t memo_size() const { return memo_.size(); }
  std::size_t work_done() const { return work_; }

 private:
  using Key = std::vector<std::uint64_t>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  struct Choice {
    Score points;
    std::vector<std::uint64_t> remainder;
    bool moved = false;
  };

  const std::vector<HeapMove>& moves(std::uint64_t heap);
  Key normalise(std::vector<std::uint64_t> heaps, bool keep_order);
  Score solve(const Key& key);
  Score solve_sequential(const Key& key);
  void group_choices(std::uint64_t heap, std::size_t count, std::vector<Choice>& out);

  void charge(std::size_t units);

  OperatorKind op_;
  GsLimits limits_;
  std::size_t work_ = 0;
  std::unordered_map<Key, Score, KeyHash> memo_;
  std::unordered_map<std::uint64_t, std::vector<HeapMove>> move_cache_;
};

/// One-shot convenience over a fresh solver.
Score gs(OperatorKind op, const Position& pos);
Score gs(const SeqPosition& pos);

/// Explicit impartial game tree of a single heap. Root score 0; a move worth p
/// leads to the remainder's tree shifted by +p (Left) or -p (Right). A split
/// remainder is the `join` sum of its parts, so nesting inside a larger sum
/// under the same operator flattens. Throws std::invalid_argument when n
/// exceeds `cap`.
GameId gs_to_game(const OctalRuleset& rules, std::uint32_t n, OperatorKind join = OperatorKind::Disjunctive,
                  std::uint32_t cap = 12);

struct GsTable {
  std::vector<Score> values;  // values[n] for n = 0..(values.size()-1)
  bool truncated = false;     // the solver limits ran out before n_max
};

/// values[n] = G_s({n} + tail); for Sequential the heap n goes first.
GsTable gs_table(OperatorKind op, RulesetId rules, std::uint32_t n_max, const std::vector<Heap>& tail = {},
                 GsLimits limits = GsLimits::from_env());

struct PeriodReport {
  std::size_t preperiod = 0;
  std::size_t period = 1;
  std::size_t confirmations = 0;  // indices n with preperiod <= n <= len-1-period

  friend bool operator==(const PeriodReport&, const PeriodReport&) = default;
};

/// Smallest period p, then smallest preperiod N, with values[n+p] == values[n]
/// for every N <= n <= len-1-p and at least max(min_confirm, 1) such n.
/// Evidence of eventual periodicity, nothing more.
std::optional<PeriodReport> find_period(const std::vector<Score>& values, std::size_t min_confirm);

struct OperatorPeriods {
  OperatorKind op;
  std::vector<Score> values;
  bool truncated = false;
  std::optional<std::string> error;  // set when the operator does not apply
  std::optional<PeriodReport> period;
};

struct ConjectureReport {
  OctalRuleset rules;
  std::vector<std::uint32_t> tail;
  std::uint32_t n_max = 0;
  std::size_t min_confirm = 0;
  std::optional<std::size_t> reference_period;
  std::vector<OperatorPeriods> operators;
  /// True when every applicable operator found a period and they coincide.
  bool all_periods_equal = false;
};

/// Tables and detected periods under all four operators for the same ruleset
/// and tail (tail heaps use the same ruleset).
ConjectureReport conjecture_report(const OctalRuleset& rules, const std::vector<std::uint32_t>& tail,
                                   std::uint32_t n_max, std::size_t min_confirm,
                                   GsLimits limits = GsLimits::from_env());

}  // namespace scoring
