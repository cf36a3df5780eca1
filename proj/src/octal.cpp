#include "scoring/octal.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <string>

namespace scoring {

// ---------------------------------------------------------------------------
// Ruleset

void OctalRuleset::validate() const {
  if (digits.empty()) throw std::invalid_argument("octal ruleset has no digits");
  if (digits.size() != points.size()) {
    throw std::invalid_argument("octal ruleset has " + std::to_string(digits.size()) + " digits but " +
                                std::to_string(points.size()) + " points");
  }
  bool any = false;
  for (std::uint8_t d : digits) {
    if (d > 7) throw std::invalid_argument("octal digit " + std::to_string(d) + " out of range 0..7");
    any = any || d != 0;
  }
  if (!any) throw std::invalid_argument("octal ruleset needs at least one nonzero digit");
}

bool OctalRuleset::allows_split() const {
  return std::any_of(digits.begin(), digits.end(), [](std::uint8_t d) { return (d & 4) != 0; });
}

std::optional<std::size_t> OctalRuleset::reference_period() const {
  for (std::size_t k = digits.size(); k >= 1; --k) {
    if (digits[k - 1] > 1) return 2 * k;
  }
  return std::nullopt;
}

std::vector<Score> OctalRuleset::default_points(const std::vector<std::uint8_t>& digits) {
  std::vector<Score> points;
  points.reserve(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const bool scored = digits[i] >= 1 && digits[i] <= 3;
    points.emplace_back(scored ? static_cast<std::int64_t>(i + 1) : 0);
  }
  return points;
}

std::vector<HeapMove> heap_moves(const OctalRuleset& rules, std::uint32_t n) {
  std::vector<HeapMove> moves;
  const std::uint32_t limit = std::min<std::uint32_t>(n, static_cast<std::uint32_t>(rules.digits.size()));
  for (std::uint32_t k = 1; k <= limit; ++k) {
    const std::uint8_t d = rules.digits[k - 1];
    const Score& p = rules.points[k - 1];
    const std::uint32_t rest = n - k;
    if ((d & 1) && rest == 0) moves.push_back({p, {}});
    if ((d & 2) && rest >= 1) moves.push_back({p, {rest}});
    if (d & 4) {
      for (std::uint32_t a = 1; a <= rest / 2; ++a) moves.push_back({p, {a, rest - a}});
    }
  }
  return moves;
}

namespace {

struct RulesetRegistry {
  std::mutex mutex;
  std::vector<std::unique_ptr<OctalRuleset>> entries;
};

RulesetRegistry& registry() {
  static RulesetRegistry r;
  return r;
}

}  // namespace

RulesetId intern_ruleset(const OctalRuleset& rules) {
  rules.validate();
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    if (*r.entries[i] == rules) return RulesetId{static_cast<std::uint32_t>(i)};
  }
  r.entries.push_back(std::make_unique<OctalRuleset>(rules));
  return RulesetId{static_cast<std::uint32_t>(r.entries.size() - 1)};
}

const OctalRuleset& ruleset(RulesetId id) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  if (id.value >= r.entries.size()) throw std::invalid_argument("unknown ruleset id");
  return *r.entries[id.value];
}

// ---------------------------------------------------------------------------
// Positions

Position::Position(std::vector<Heap> heaps) : heaps_(std::move(heaps)) {
  std::erase_if(heaps_, [](const Heap& h) { return h.size == 0; });
  std::sort(heaps_.begin(), heaps_.end());
}

Position Position::of(RulesetId rules, std::initializer_list<std::uint32_t> sizes) {
  std::vector<Heap> heaps;
  for (std::uint32_t s : sizes) heaps.push_back({rules, s});
  return Position(std::move(heaps));
}

Position Position::with(Heap heap) const {
  std::vector<Heap> heaps = heaps_;
  heaps.push_back(heap);
  return Position(std::move(heaps));
}

SeqPosition::SeqPosition(std::vector<Heap> heaps) : heaps_(std::move(heaps)) {
  std::erase_if(heaps_, [](const Heap& h) { return h.size == 0; });
}

SeqPosition SeqPosition::of(RulesetId rules, std::initializer_list<std::uint32_t> sizes) {
  std::vector<Heap> heaps;
  for (std::uint32_t s : sizes) heaps.push_back({rules, s});
  return SeqPosition(std::move(heaps));
}

// ---------------------------------------------------------------------------
// Solver

namespace {

std::uint64_t pack(Heap h) { return (std::uint64_t{h.rules.value} << 32) | h.size; }
std::uint64_t pack(std::uint64_t rules_bits, std::uint32_t size) { return (rules_bits & ~0xFFFFFFFFULL) | size; }
RulesetId rules_of(std::uint64_t packed) { return RulesetId{static_cast<std::uint32_t>(packed >> 32)}; }
std::uint32_t size_of(std::uint64_t packed) { return static_cast<std::uint32_t>(packed & 0xFFFFFFFFULL); }

}  // namespace

std::size_t GsSolver::KeyHash::operator()(const Key& k) const noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (std::uint64_t v : k) {
    h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001B3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 32));
}

namespace {

void read_env(const char* name, std::size_t& target) {
  if (const char* env = std::getenv(name)) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) target = static_cast<std::size_t>(v);
  }
}

}  // namespace

GsLimits GsLimits::from_env() {
  GsLimits limits;
  read_env("SCORING_GS_STATE_BUDGET", limits.states);
  read_env("SCORING_GS_WORK_BUDGET", limits.work);
  return limits;
}

GsSolver::GsSolver(OperatorKind op, GsLimits limits) : op_(op), limits_(limits) {}

void GsSolver::charge(std::size_t units) {
  work_ += units;
  if (work_ > limits_.work) {
    throw GsBudgetExceeded("G_s work budget of " + std::to_string(limits_.work) + " move combinations exhausted");
  }
}

const std::vector<HeapMove>& GsSolver::moves(std::uint64_t heap) {
  auto it = move_cache_.find(heap);
  if (it == move_cache_.end()) {
    it = move_cache_.emplace(heap, heap_moves(ruleset(rules_of(heap)), size_of(heap))).first;
  }
  return it->second;
}

GsSolver::Key GsSolver::normalise(std::vector<std::uint64_t> heaps, bool keep_order) {
  std::erase_if(heaps, [this](std::uint64_t h) { return size_of(h) == 0 || moves(h).empty(); });
  if (!keep_order) std::sort(heaps.begin(), heaps.end());
  return heaps;
}

Score GsSolver::value(const Position& pos) {
  if (op_ == OperatorKind::Sequential) {
    throw std::invalid_argument("sequential G_s needs an ordered SeqPosition");
  }
  std::vector<std::uint64_t> heaps;
  for (const Heap& h : pos.heaps()) heaps.push_back(pack(h));
  return solve(normalise(std::move(heaps), false));
}

Score GsSolver::value(const SeqPosition& pos) {
  if (op_ != OperatorKind::Sequential) {
    return value(Position(pos.heaps()));
  }
  std::vector<std::uint64_t> heaps;
  for (const Heap& h : pos.heaps()) {
    if (ruleset(h.rules).allows_split()) {
      throw std::invalid_argument("splitting rulesets are not defined under the sequential join");
    }
    heaps.push_back(pack(h));
  }
  return solve_sequential(normalise(std::move(heaps), true));
}

void GsSolver::group_choices(std::uint64_t heap, std::size_t count, std::vector<Choice>& out) {
  // Multisets of `count` choices over the heap's moves; for the selective sum
  // index m.size() means "this copy stays".
  const auto& m = moves(heap);
  const std::size_t options = m.size() + (op_ == OperatorKind::Selective ? 1 : 0);
  std::vector<std::size_t> pick(count, 0);
  while (true) {
    Choice c;
    c.points = 0;
    for (std::size_t idx : pick) {
      if (idx == m.size()) {
        c.remainder.push_back(heap);
        continue;
      }
      c.moved = true;
      c.points += m[idx].points;
      for (std::uint32_t r : m[idx].remainder) c.remainder.push_back(pack(heap, r));
    }
    out.push_back(std::move(c));
    // next nondecreasing sequence
    std::size_t i = count;
    while (i > 0 && pick[i - 1] + 1 == options) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < count; ++j) pick[j] = pick[i - 1];
  }
}

Score GsSolver::solve(const Key& key) {
  if (key.empty()) return 0;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (memo_.size() >= limits_.states) {
    throw GsBudgetExceeded("G_s state budget of " + std::to_string(limits_.states) + " exhausted");
  }

  std::unordered_map<Key, Score, KeyHash> next;
  auto offer = [&](std::vector<std::uint64_t> heaps, const Score& points) {
    charge(1);
    Key k = normalise(std::move(heaps), false);
    auto [it, inserted] = next.emplace(std::move(k), points);
    if (!inserted && points > it->second) it->second = points;
  };

  if (op_ == OperatorKind::Disjunctive) {
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i > 0 && key[i] == key[i - 1]) continue;
      for (const HeapMove& mv : moves(key[i])) {
        std::vector<std::uint64_t> heaps;
        heaps.reserve(key.size() + 1);
        for (std::size_t j = 0; j < key.size(); ++j) {
          if (j != i) heaps.push_back(key[j]);
        }
        for (std::uint32_t r : mv.remainder) heaps.push_back(pack(key[i], r));
        offer(std::move(heaps), mv.points);
      }
    }
  } else {
    // Every heap in the key is live. Group identical heaps so that copies
    // contribute multisets of choices rather than ordered tuples.
    std::vector<std::vector<Choice>> groups;
    for (std::size_t i = 0; i < key.size();) {
      std::size_t j = i;
      while (j < key.size() && key[j] == key[i]) ++j;
      groups.emplace_back();
      group_choices(key[i], j - i, groups.back());
      i = j;
    }
    std::vector<std::uint64_t> heaps;
    Score points = 0;
    bool moved = false;
    auto product = [&](auto& self, std::size_t g) -> void {
      if (g == groups.size()) {
        if (moved) offer(heaps, points);
        return;
      }
      for (const Choice& c : groups[g]) {
        const std::size_t mark = heaps.size();
        const bool was_moved = moved;
        const Score was_points = points;
        heaps.insert(heaps.end(), c.remainder.begin(), c.remainder.end());
        points += c.points;
        moved = moved || c.moved;
        self(self, g + 1);
        heaps.resize(mark);
        points = was_points;
        moved = was_moved;
      }
    };
    product(product, 0);
  }

  Score best = 0;
  bool first = true;
  for (const auto& [k, pts] : next) {
    Score v = pts - solve(k);
    if (first || v > best) best = v;
    first = false;
  }
  memo_.emplace(key, best);
  return best;
}

Score GsSolver::solve_sequential(const Key& key) {
  if (key.empty()) return 0;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (memo_.size() >= limits_.states) {
    throw GsBudgetExceeded("G_s state budget of " + std::to_string(limits_.states) + " exhausted");
  }

  Score best = 0;
  bool first = true;
  for (const HeapMove& mv : moves(key.front())) {
    charge(1);
    std::vector<std::uint64_t> heaps;
    for (std::uint32_t r : mv.remainder) heaps.push_back(pack(key.front(), r));
    heaps.insert(heaps.end(), key.begin() + 1, key.end());
    Score v = mv.points - solve_sequential(normalise(std::move(heaps), true));
    if (first || v > best) best = v;
    first = false;
  }
  memo_.emplace(key, best);
  return best;
}

Score gs(OperatorKind op, const Position& pos) {
  GsSolver solver(op);
  return solver.value(pos);
}

Score gs(const SeqPosition& pos) {
  GsSolver solver(OperatorKind::Sequential);
  return solver.value(pos);
}

// ---------------------------------------------------------------------------
// Trees, tables, periods

GameId gs_to_game(const OctalRuleset& rules, std::uint32_t n, OperatorKind join, std::uint32_t cap) {
  rules.validate();
  if (n > cap) {
    throw std::invalid_argument("heap size " + std::to_string(n) + " exceeds tree cap " + std::to_string(cap));
  }
  if (join == OperatorKind::Sequential && rules.allows_split()) {
    throw std::invalid_argument("splitting rulesets are not defined under the sequential join");
  }
  std::vector<std::optional<GameId>> memo(n + 1);
  auto tree = [&](auto& self, std::uint32_t size) -> GameId {
    if (memo[size]) return *memo[size];
    std::vector<GameId> left;
    std::vector<GameId> right;
    for (const HeapMove& mv : heap_moves(rules, size)) {
      GameId rest;
      if (mv.remainder.empty()) {
        rest = number(0);
      } else if (mv.remainder.size() == 1) {
        rest = self(self, mv.remainder[0]);
      } else {
        const GameId parts[] = {self(self, mv.remainder[0]), self(self, mv.remainder[1])};
        rest = sum(join, parts);
      }
      left.push_back(shift(rest, mv.points));
      right.push_back(shift(rest, -mv.points));
    }
    GameId g = make_game(std::move(left), 0, std::move(right));
    memo[size] = g;
    return g;
  };
  return tree(tree, n);
}

GsTable gs_table(OperatorKind op, RulesetId rules, std::uint32_t n_max, const std::vector<Heap>& tail,
                 GsLimits limits) {
  GsSolver solver(op, limits);
  GsTable table;
  table.values.reserve(n_max + 1);
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    std::vector<Heap> heaps;
    heaps.reserve(tail.size() + 1);
    heaps.push_back({rules, n});
    heaps.insert(heaps.end(), tail.begin(), tail.end());
    try {
      if (op == OperatorKind::Sequential) {
        table.values.push_back(solver.value(SeqPosition(std::move(heaps))));
      } else {
        table.values.push_back(solver.value(Position(std::move(heaps))));
      }
    } catch (const GsBudgetExceeded&) {
      table.truncated = true;
      break;
    }
  }
  return table;
}

std::optional<PeriodReport> find_period(const std::vector<Score>& values, std::size_t min_confirm) {
  const std::size_t need = std::max<std::size_t>(min_confirm, 1);
  const std::size_t len = values.size();
  for (std::size_t p = 1; p < len; ++p) {
    std::size_t start = 0;
    for (std::size_t n = len - p; n-- > 0;) {
      if (values[n + p] != values[n]) {
        start = n + 1;
        break;
      }
    }
    const std::size_t confirmations = len - p - start;
    if (confirmations >= need) return PeriodReport{start, p, confirmations};
  }
  return std::nullopt;
}

ConjectureReport conjecture_report(const OctalRuleset& rules, const std::vector<std::uint32_t>& tail,
                                   std::uint32_t n_max, std::size_t min_confirm, GsLimits limits) {
  ConjectureReport report;
  report.rules = rules;
  report.tail = tail;
  report.n_max = n_max;
  report.min_confirm = min_confirm;
  report.reference_period = rules.reference_period();

  const RulesetId id = intern_ruleset(rules);
  std::vector<Heap> tail_heaps;
  for (std::uint32_t s : tail) tail_heaps.push_back({id, s});

  std::optional<std::size_t> common;
  bool agree = true;
  bool any = false;
  for (OperatorKind op : kAllOperators) {
    OperatorPeriods entry{op, {}, false, std::nullopt, std::nullopt};
    if (op == OperatorKind::Sequential && rules.allows_split()) {
      entry.error = "splitting rulesets are not defined under the sequential join";
      report.operators.push_back(std::move(entry));
      continue;
    }
    GsTable table = gs_table(op, id, n_max, tail_heaps, limits);
    entry.values = std::move(table.values);
    entry.truncated = table.truncated;
    entry.period = find_period(entry.values, min_confirm);
    any = true;
    if (!entry.period) {
      agree = false;
    } else if (!common) {
      common = entry.period->period;
    } else if (*common != entry.period->period) {
      agree = false;
    }
    report.operators.push_back(std::move(entry));
  }
  report.all_periods_equal = any && agree;
  return report;
}

}  // namespace scoring
