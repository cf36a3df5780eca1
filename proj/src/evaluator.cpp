#include "scoring/evaluator.hpp"

namespace scoring {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Left: return "L";
    case Outcome::Right: return "R";
    case Outcome::Next: return "N";
    case Outcome::Previous: return "P";
    case Outcome::Tie: return "Tie";
  }
  return "?";
}

FinalScores final_scores(GameId g) { return node(g).final_scores; }

Outcome outcome(const FinalScores& fs) {
  const int l = fs.left_first.sign();
  const int r = fs.right_first.sign();
  if (l == 0 && r == 0) return Outcome::Tie;
  if (l > 0 && r < 0) return Outcome::Next;
  if (l < 0 && r > 0) return Outcome::Previous;
  // remaining pairs have no strictly negative (resp. positive) component
  if (l >= 0 && r >= 0) return Outcome::Left;
  return Outcome::Right;
}

Outcome outcome(GameId g) { return outcome(final_scores(g)); }

Outcome mirror(Outcome o) {
  switch (o) {
    case Outcome::Left: return Outcome::Right;
    case Outcome::Right: return Outcome::Left;
    default: return o;
  }
}

std::optional<GameId> best_option(GameId g, Side mover) {
  const GameNode& n = node(g);
  if (mover == Side::Left) {
    if (n.left.empty()) return std::nullopt;
    for (GameId o : n.left) {
      if (final_scores(o).right_first == n.final_scores.left_first) return o;
    }
  } else {
    if (n.right.empty()) return std::nullopt;
    for (GameId o : n.right) {
      if (final_scores(o).left_first == n.final_scores.right_first) return o;
    }
  }
  return std::nullopt;  // unreachable: the cached value comes from some option
}

std::vector<GameId> principal_line(GameId g, Side first) {
  std::vector<GameId> line{g};
  Side mover = first;
  while (auto next = best_option(line.back(), mover)) {
    line.push_back(*next);
    mover = mover == Side::Left ? Side::Right : Side::Left;
  }
  return line;
}

}  // namespace scoring
