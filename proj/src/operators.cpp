#include "scoring/operators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace scoring {

std::string_view to_string(OperatorKind op) {
  switch (op) {
    case OperatorKind::Disjunctive: return "disj";
    case OperatorKind::Conjunctive: return "conj";
    case OperatorKind::Selective: return "sel";
    case OperatorKind::Sequential: return "seq";
  }
  return "?";
}

std::optional<OperatorKind> parse_operator(std::string_view name) {
  if (name == "disj" || name == "disjunctive") return OperatorKind::Disjunctive;
  if (name == "conj" || name == "conjunctive") return OperatorKind::Conjunctive;
  if (name == "sel" || name == "selective") return OperatorKind::Selective;
  if (name == "seq" || name == "sequential") return OperatorKind::Sequential;
  return std::nullopt;
}

namespace {

const std::vector<GameId>& options_for(GameId g, Side side) {
  return side == Side::Left ? left_options(g) : right_options(g);
}

Side other(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

// A position inside a composite: the components that still have a tree
// (leaves are folded into a score offset by the caller), plus, for the literal
// conjunctive rule, whether a component has already died and frozen play.
struct State {
  std::vector<GameId> parts;
  bool frozen = false;

  friend bool operator==(const State&, const State&) = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::size_t h = s.frozen ? 0x51ED270B27ULL : 0x2545F4914F6CDD1DULL;
    for (GameId id : s.parts) h = (h ^ id.value) * 0x100000001B3ULL + (h >> 29);
    return h;
  }
};

// A successor: the state plus the scores of components that became leaves.
struct Step {
  State state;
  Score offset;
};

Score sum_of_roots(const std::vector<GameId>& parts) {
  Score total = 0;
  for (GameId g : parts) total += root_score(g);
  return total;
}

// Folds leaf components into an offset. Order is kept for sequences; the
// commutative operators sort by id.
Step normalise(std::vector<GameId> parts, OperatorKind op, Semantics semantics, bool frozen) {
  Step step;
  step.offset = 0;
  if (op == OperatorKind::Sequential) {
    std::size_t lead = 0;
    while (lead < parts.size() && is_leaf(parts[lead])) step.offset += root_score(parts[lead++]);
    parts.erase(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(lead));
    step.state.parts = std::move(parts);
    return step;
  }
  const std::size_t before = parts.size();
  std::vector<GameId> live;
  live.reserve(parts.size());
  for (GameId g : parts) {
    if (is_leaf(g)) {
      step.offset += root_score(g);
    } else {
      live.push_back(g);
    }
  }
  if (op == OperatorKind::Conjunctive && semantics.conjunctive == ConjunctiveRule::Literal) {
    frozen = frozen || (before >= 2 && live.size() < before && !live.empty());
  }
  std::sort(live.begin(), live.end());
  step.state.parts = std::move(live);
  step.state.frozen = frozen && !step.state.parts.empty();
  return step;
}

// Every successor state reachable in one turn by `side`.
std::vector<Step> successors(const State& state, Side side, OperatorKind op, Semantics semantics) {
  std::vector<Step> out;
  const auto& parts = state.parts;
  if (state.frozen || parts.empty()) return out;

  if (op == OperatorKind::Sequential) {
    for (GameId o : options_for(parts.front(), side)) {
      std::vector<GameId> next = parts;
      next.front() = o;
      out.push_back(normalise(std::move(next), op, semantics, false));
    }
    return out;
  }

  if (op == OperatorKind::Disjunctive) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0 && parts[i] == parts[i - 1]) continue;
      for (GameId o : options_for(parts[i], side)) {
        std::vector<GameId> next = parts;
        next[i] = o;
        out.push_back(normalise(std::move(next), op, semantics, false));
      }
    }
    return out;
  }

  std::vector<std::size_t> movable;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!options_for(parts[i], side).empty()) movable.push_back(i);
  }
  if (movable.empty()) return out;
  const bool literal = op == OperatorKind::Conjunctive && semantics.conjunctive == ConjunctiveRule::Literal;
  if (literal && movable.size() != parts.size()) return out;

  // Each movable component either moves (any option) or, for the selective
  // sum only, stays; the all-stay choice is excluded.
  const bool may_stay = op == OperatorKind::Selective;
  std::vector<GameId> next = parts;
  std::size_t moved = 0;
  auto recurse = [&](auto& self, std::size_t k) -> void {
    if (k == movable.size()) {
      if (moved > 0) out.push_back(normalise(next, op, semantics, state.frozen));
      return;
    }
    const std::size_t i = movable[k];
    if (may_stay) self(self, k + 1);
    for (GameId o : options_for(parts[i], side)) {
      next[i] = o;
      ++moved;
      self(self, k + 1);
      --moved;
    }
    next[i] = parts[i];
  };
  recurse(recurse, 0);
  return out;
}

class DirectEvaluator {
 public:
  DirectEvaluator(OperatorKind op, Semantics semantics) : op_(op), semantics_(semantics) {}

  // Final score of the composite `state` (offset excluded) with `side` to move.
  Score value(const State& state, Side side) {
    auto& memo = side == Side::Left ? left_memo_ : right_memo_;
    if (auto it = memo.find(state); it != memo.end()) return it->second;
    std::vector<Step> steps = successors(state, side, op_, semantics_);
    Score best = sum_of_roots(state.parts);
    bool first = true;
    for (const Step& step : steps) {
      Score v = step.offset + value(step.state, other(side));
      if (first || (side == Side::Left ? v > best : v < best)) best = v;
      first = false;
    }
    memo.emplace(state, best);
    return best;
  }

 private:
  OperatorKind op_;
  Semantics semantics_;
  std::unordered_map<State, Score, StateHash> left_memo_;
  std::unordered_map<State, Score, StateHash> right_memo_;
};

class TreeBuilder {
 public:
  TreeBuilder(OperatorKind op, Semantics semantics) : op_(op), semantics_(semantics) {}

  GameId build(const State& state, Score offset) {
    Key key{state, offset};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Score score = offset + sum_of_roots(state.parts);
    std::vector<GameId> left;
    std::vector<GameId> right;
    for (const Step& step : successors(state, Side::Left, op_, semantics_)) {
      left.push_back(build(step.state, offset + step.offset));
    }
    for (const Step& step : successors(state, Side::Right, op_, semantics_)) {
      right.push_back(build(step.state, offset + step.offset));
    }
    GameId g = make_game(std::move(left), score, std::move(right));
    memo_.emplace(std::move(key), g);
    return g;
  }

 private:
  struct Key {
    State state;
    Score offset;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return StateHash{}(k.state) ^ (ScoreHash{}(k.offset) << 1); }
  };

  OperatorKind op_;
  Semantics semantics_;
  std::unordered_map<Key, GameId, KeyHash> memo_;
};

// G |> H, straight from the recursive definition.
class SequentialJoiner {
 public:
  GameId join(GameId g, GameId h) {
    auto key = std::make_pair(g.value, h.value);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    GameId result;
    if (is_leaf(g)) {
      result = shift(h, root_score(g));
    } else {
      std::vector<GameId> left;
      std::vector<GameId> right;
      for (GameId o : left_options(g)) left.push_back(join(o, h));
      for (GameId o : right_options(g)) right.push_back(join(o, h));
      result = make_game(std::move(left), root_score(g) + root_score(h), std::move(right));
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  std::map<std::pair<std::uint32_t, std::uint32_t>, GameId> memo_;
};

void require_components(std::span<const GameId> components) {
  if (components.empty()) throw std::invalid_argument("sum needs at least one component");
}

}  // namespace

GameId sum(OperatorKind op, std::span<const GameId> components, Semantics semantics) {
  require_components(components);
  if (op == OperatorKind::Sequential) {
    SequentialJoiner joiner;
    GameId acc = components.back();
    for (std::size_t i = components.size() - 1; i-- > 0;) acc = joiner.join(components[i], acc);
    return acc;
  }
  Step start = normalise({components.begin(), components.end()}, op, semantics, false);
  TreeBuilder builder(op, semantics);
  return builder.build(start.state, start.offset);
}

FinalScores eval_sum(OperatorKind op, std::span<const GameId> components, Semantics semantics) {
  require_components(components);
  Step start = normalise({components.begin(), components.end()}, op, semantics, false);
  DirectEvaluator evaluator(op, semantics);
  return {start.offset + evaluator.value(start.state, Side::Left),
          start.offset + evaluator.value(start.state, Side::Right)};
}

}  // namespace scoring
