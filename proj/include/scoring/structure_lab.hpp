#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "scoring/evaluator.hpp"
#include "scoring/game.hpp"
#include "scoring/operators.hpp"

namespace scoring {

/// Sampling parameters for random game trees. For impartial generation the
/// palette holds per-move score increments; for general games it holds
/// absolute node scores.
struct ImpartialParams {
  std::size_t max_depth = 4;
  std::size_t max_branching = 3;
  std::vector<Score> palette{-2, -1, 0, 1, 2};
  double leaf_probability = 0.3;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument for an empty palette, zero branching or a
  /// probability outside [0, 1].
  void validate() const;
};

/// Tree-identity reading of impartiality: at every node Left has options iff
/// Right does, and each option g on one side has a partner h on the other with
/// shift(g, -S) == negate(shift(h, -S)), in both directions. Sound but not
/// complete: games that are only *equal* to impartial ones are rejected.
bool is_impartial(GameId g);

/// Impartial game with root score drawn from the palette; each left option is
/// a recursively generated game one palette increment away, mirrored on the
/// right as shift(negate(shift(gL, -s)), s). Deterministic in the seed.
GameId random_impartial(const ImpartialParams& params);

/// Arbitrary game with independent left and right options and node scores
/// drawn from the palette. Deterministic in the seed.
GameId random_game(const ImpartialParams& params);

/// Impartial H with final scores (-SL(g), -SR(g)), so g (conj) H is a tie.
/// Impartial components of a conjunctive sum each see strictly alternating
/// play, which makes their final scores add; any such H is an inverse.
/// Returns reverse(g) when its final scores already qualify (always for
/// leaves and forced lines), else {-SL(g) | -root | -SR(g)}. Throws
/// std::invalid_argument for games that are not impartial.
GameId conjunctive_inverse(GameId g);

struct IdentityCounterexample {
  GameId probe;
  Outcome expected;  // outcome of the probe alone
  Outcome actual;    // outcome of candidate (op) probe
};

struct IdentityReport {
  std::size_t samples = 0;
  std::size_t passed = 0;
  std::optional<IdentityCounterexample> first_failure;

  double pass_fraction() const { return samples == 0 ? 1.0 : static_cast<double>(passed) / samples; }
};

/// Checks outcome(sum(op, [candidate, P])) == outcome(P) over `samples` probes
/// drawn with seeds params.seed, params.seed+1, ... Probes are impartial,
/// except for the sequential join whose identity claim covers all games.
IdentityReport identity_test(GameId candidate, OperatorKind op, std::size_t samples,
                             const ImpartialParams& params = {});

/// A context X that tells two games apart: outcome(g (op) X) differs from
/// outcome(h (op) X). For nonzero witnesses h is the zero game.
struct ContextWitness {
  GameId context;
  OperatorKind op;
  Outcome with_g;
  Outcome with_h;
};

/// Witness that g is not equivalent to 0 under the conjunctive or selective
/// sum. A nonzero leaf is separated by the context 0; otherwise the gadget
/// {.|1|b} (or its mirror {b'|-1|.} when g has only right options) with
/// |b| = 2 + max |node score of g|. Throws std::invalid_argument for g == 0
/// or an unsupported operator, std::logic_error if the gadget fails.
ContextWitness nonzero_witness(GameId g, OperatorKind op);

enum class ContextClass { All, Impartial };

struct ContextSearch {
  std::size_t depth = 2;
  std::size_t budget = 10'000;
  std::size_t max_branching = 2;
  std::vector<Score> palette{-2, -1, 0, 1, 2};
  /// Defaults to Impartial when both compared games are impartial.
  std::optional<ContextClass> contexts;
};

/// Bounded search for a distinguishing context: first the nonzero gadgets of
/// g and h, then every game over the palette up to the given depth in
/// canonical order, stopping after `budget` contexts. std::nullopt means
/// "indistinguishable within bounds", not equivalence.
std::optional<ContextWitness> distinguishing_context(GameId g, GameId h, OperatorKind op,
                                                     const ContextSearch& search = {});

/// Contexts enumerated by distinguishing_context, in order, up to `limit`.
std::vector<GameId> enumerate_contexts(const ContextSearch& search, ContextClass cls, std::size_t limit);

struct InverseSearch {
  std::size_t depth = 2;
  std::size_t budget = 2'000;
  std::vector<Score> palette{-2, -1, 0, 1, 2};
  std::size_t probes = 40;
  std::uint64_t seed = 0;
};

/// Looks for Y with outcome(sum(op, [g, Y, P])) == outcome(P) on a fixed probe
/// set. Candidates: reverse(g), conjunctive_inverse(g) for the conjunctive
/// sum, negate(g), then enumerated impartial games.
/// Heuristic evidence only.
std::optional<GameId> inverse_search(GameId g, OperatorKind op, const InverseSearch& search = {});

/// Probe set used by inverse_search: small leaves, i, and seeded samples.
std::vector<GameId> inverse_probes(OperatorKind op, const InverseSearch& search);

/// i = {{0|0|0}|0|{0|0|0}}.
GameId identity_game();

}  // namespace scoring
