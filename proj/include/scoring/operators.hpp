#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "scoring/evaluator.hpp"
#include "scoring/game.hpp"

namespace scoring {

enum class OperatorKind { Disjunctive, Conjunctive, Selective, Sequential };

inline constexpr OperatorKind kAllOperators[] = {OperatorKind::Disjunctive, OperatorKind::Conjunctive,
                                                 OperatorKind::Selective, OperatorKind::Sequential};

/// Short names "disj", "conj", "sel", "seq".
std::string_view to_string(OperatorKind op);
/// Accepts the short names and "disjunctive", "conjunctive", "selective",
/// "sequential".
std::optional<OperatorKind> parse_operator(std::string_view name);

/// How a conjunctive move treats components where the mover has no option.
enum class ConjunctiveRule {
  /// Move in every component that has an option for the mover; the rest stay.
  Available,
  /// {G^L x H^L | ... | G^R x H^R} read literally: no move unless every
  /// component has an option for the mover. Kept as a test hook only.
  Literal,
};

struct Semantics {
  ConjunctiveRule conjunctive = ConjunctiveRule::Available;
};

/// Materialises the composite game tree (long rule: play ends when the mover
/// has no move anywhere).
///  - Disjunctive: move in exactly one component.
///  - Conjunctive: move in every component where the mover has an option.
///  - Selective: move in any nonempty subset of such components.
///  - Sequential: right-associated join; G|>H = {G^L|>H | G^S+H^S | G^R|>H}
///    while G has options, and H shifted by G^S once G is a leaf.
/// Throws std::invalid_argument on an empty component list.
GameId sum(OperatorKind op, std::span<const GameId> components, Semantics semantics = {});

/// Final scores of sum(op, components) computed by memoised search over
/// component multisets (sequences for Sequential) without building the tree.
FinalScores eval_sum(OperatorKind op, std::span<const GameId> components, Semantics semantics = {});

}  // namespace scoring
