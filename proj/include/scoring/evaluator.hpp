#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "scoring/game.hpp"

namespace scoring {

enum class Outcome { Left, Right, Next, Previous, Tie };

/// "L", "R", "N", "P" or "Tie".
std::string_view to_string(Outcome o);

/// Final scores under optimal play. A player with no option ends the game at
/// the current node score. Computed once per node at intern time, so this is
/// a constant-time lookup.
FinalScores final_scores(GameId g);

/// Outcome class from the signs of the two final scores.
Outcome outcome(const FinalScores& fs);
Outcome outcome(GameId g);

/// Outcome after swapping the players: L<->R, N, P and Tie fixed.
Outcome mirror(Outcome o);

enum class Side { Left, Right };

/// An optimal option for `mover`, the first in canonical order among ties.
/// Empty when the mover has no option.
std::optional<GameId> best_option(GameId g, Side mover);

/// Sequence of nodes visited under optimal play with `first` to move,
/// starting at g and ending at the node where the mover has no option.
std::vector<GameId> principal_line(GameId g, Side first);

}  // namespace scoring
