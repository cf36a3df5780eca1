#include "scoring/structure_lab.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace scoring {

void ImpartialParams::validate() const {
  if (palette.empty()) throw std::invalid_argument("score palette is empty");
  if (max_branching == 0) throw std::invalid_argument("max branching must be positive");
  if (!(leaf_probability >= 0.0 && leaf_probability <= 1.0)) {
    throw std::invalid_argument("leaf probability outside [0, 1]");
  }
}

GameId identity_game() {
  GameId zero_move = make_game({number(0)}, 0, {number(0)});
  return make_game({zero_move}, 0, {zero_move});
}

namespace {

// The right option that partners left option `option` of a node with score s.
GameId mirror_option(GameId option, const Score& s) { return shift(negate(shift(option, -s)), s); }

bool contains(const std::vector<GameId>& sorted_options, GameId g) {
  return std::find(sorted_options.begin(), sorted_options.end(), g) != sorted_options.end();
}

}  // namespace

bool is_impartial(GameId g) {
  std::unordered_map<GameId, bool, GameIdHash> memo;
  auto check = [&](auto& self, GameId x) -> bool {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    const GameNode& n = node(x);
    bool ok = n.left.empty() == n.right.empty();
    for (GameId o : n.left) {
      if (!ok) break;
      ok = contains(n.right, mirror_option(o, n.score));
    }
    for (GameId o : n.right) {
      if (!ok) break;
      ok = contains(n.left, mirror_option(o, n.score));
    }
    for (GameId o : n.left) {
      if (!ok) break;
      ok = self(self, o);
    }
    for (GameId o : n.right) {
      if (!ok) break;
      ok = self(self, o);
    }
    memo.emplace(x, ok);
    return ok;
  };
  return check(check, g);
}

namespace {

class Sampler {
 public:
  explicit Sampler(const ImpartialParams& params) : params_(params), rng_(params.seed) { params.validate(); }

  const Score& palette_pick() {
    std::uniform_int_distribution<std::size_t> pick(0, params_.palette.size() - 1);
    return params_.palette[pick(rng_)];
  }
  bool leaf() { return std::bernoulli_distribution(params_.leaf_probability)(rng_); }
  std::size_t branches(std::size_t low) {
    return std::uniform_int_distribution<std::size_t>(low, params_.max_branching)(rng_);
  }

  GameId impartial(std::size_t depth, const Score& s) {
    if (depth == 0 || leaf()) return number(s);
    std::vector<GameId> left;
    std::vector<GameId> right;
    const std::size_t k = branches(1);
    for (std::size_t i = 0; i < k; ++i) {
      GameId child = impartial(depth - 1, s + palette_pick());
      left.push_back(child);
      right.push_back(mirror_option(child, s));
    }
    return make_game(std::move(left), s, std::move(right));
  }

  GameId general(std::size_t depth) {
    const Score s = palette_pick();
    if (depth == 0 || leaf()) return number(s);
    std::vector<GameId> left;
    std::vector<GameId> right;
    const std::size_t nl = branches(0);
    for (std::size_t i = 0; i < nl; ++i) left.push_back(general(depth - 1));
    const std::size_t nr = branches(0);
    for (std::size_t i = 0; i < nr; ++i) right.push_back(general(depth - 1));
    return make_game(std::move(left), s, std::move(right));
  }

 private:
  const ImpartialParams& params_;
  std::mt19937_64 rng_;
};

}  // namespace

GameId random_impartial(const ImpartialParams& params) {
  Sampler sampler(params);
  const Score root = sampler.palette_pick();
  return sampler.impartial(params.max_depth, root);
}

GameId random_game(const ImpartialParams& params) {
  Sampler sampler(params);
  return sampler.general(params.max_depth);
}

GameId conjunctive_inverse(GameId g) {
  if (!is_impartial(g)) throw std::invalid_argument("conjunctive_inverse needs an impartial game");
  const FinalScores fs = final_scores(g);
  const GameId reversed = reverse(g);
  const FinalScores rs = final_scores(reversed);
  if (rs.left_first == -fs.left_first && rs.right_first == -fs.right_first) return reversed;
  const Score root = -root_score(g);
  return make_game({number(-fs.left_first)}, root, {number(-fs.right_first)});
}

IdentityReport identity_test(GameId candidate, OperatorKind op, std::size_t samples, const ImpartialParams& params) {
  IdentityReport report;
  report.samples = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    ImpartialParams p = params;
    p.seed = params.seed + i;
    const GameId probe = op == OperatorKind::Sequential ? random_game(p) : random_impartial(p);
    const GameId parts[] = {candidate, probe};
    const Outcome expected = outcome(probe);
    const Outcome actual = outcome(eval_sum(op, parts));
    if (expected == actual) {
      ++report.passed;
    } else if (!report.first_failure) {
      report.first_failure = IdentityCounterexample{probe, expected, actual};
    }
  }
  return report;
}

ContextWitness nonzero_witness(GameId g, OperatorKind op) {
  if (op != OperatorKind::Conjunctive && op != OperatorKind::Selective) {
    throw std::invalid_argument("nonzero witnesses are constructed for the conjunctive and selective sums");
  }
  if (g == number(0)) throw std::invalid_argument("the zero game has no nonzero witness");

  GameId context;
  if (is_leaf(g)) {
    context = number(0);
  } else {
    const Score bound = max_abs_score(g) + 2;
    if (!left_options(g).empty()) {
      context = make_game({}, 1, {number(-bound)});
    } else {
      context = make_game({number(bound)}, -1, {});
    }
  }
  const GameId parts[] = {g, context};
  ContextWitness witness{context, op, outcome(eval_sum(op, parts)), outcome(context)};
  if (witness.with_g == witness.with_h) {
    throw std::logic_error("nonzero gadget failed to separate " + std::to_string(g.value) + " from 0");
  }
  return witness;
}

namespace {

// Calls emit(subset) for every subset of `atoms` of size min_size..max_size,
// by size then lexicographic index order. Stops when emit returns false.
template <typename Emit>
bool for_each_subset(const std::vector<GameId>& atoms, std::size_t min_size, std::size_t max_size, Emit&& emit) {
  std::vector<GameId> chosen;
  for (std::size_t size = min_size; size <= max_size && size <= atoms.size(); ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      chosen.clear();
      for (std::size_t i : idx) chosen.push_back(atoms[i]);
      if (!emit(chosen)) return false;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == atoms.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

std::vector<Score> sorted_palette(std::vector<Score> palette) {
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  return palette;
}

}  // namespace

std::vector<GameId> enumerate_contexts(const ContextSearch& search, ContextClass cls, std::size_t limit) {
  std::vector<GameId> out;
  std::unordered_set<GameId, GameIdHash> seen;
  const std::vector<Score> palette = sorted_palette(search.palette);
  auto push = [&](GameId g) {
    if (out.size() >= limit) return false;
    if (seen.insert(g).second) out.push_back(g);
    return out.size() < limit;
  };

  if (cls == ContextClass::All) {
    for (const Score& s : palette) {
      if (!push(number(s))) return out;
    }
    for (std::size_t level = 1; level <= search.depth; ++level) {
      const std::vector<GameId> atoms = out;
      for (const Score& s : palette) {
        bool go = for_each_subset(atoms, 0, search.max_branching, [&](const std::vector<GameId>& left) {
          return for_each_subset(atoms, 0, search.max_branching, [&](const std::vector<GameId>& right) {
            if (left.empty() && right.empty()) return true;
            return push(make_game(left, s, right));
          });
        });
        if (!go) return out;
      }
    }
    return out;
  }

  // Impartial: root-0 shapes built from shifted smaller shapes and mirrored,
  // then every shape at every palette offset.
  std::vector<GameId> shapes{number(0)};
  std::unordered_set<GameId, GameIdHash> shape_seen{number(0)};
  auto emit_shapes = [&](const std::vector<GameId>& from) {
    for (GameId shape : from) {
      for (const Score& s : palette) {
        if (!push(shift(shape, s))) return false;
      }
    }
    return true;
  };
  if (!emit_shapes(shapes)) return out;
  for (std::size_t level = 1; level <= search.depth; ++level) {
    std::vector<GameId> atoms;
    for (GameId shape : shapes) {
      for (const Score& d : palette) atoms.push_back(shift(shape, d));
    }
    std::vector<GameId> fresh;
    for_each_subset(atoms, 1, search.max_branching, [&](const std::vector<GameId>& left) {
      std::vector<GameId> right;
      for (GameId o : left) right.push_back(mirror_option(o, 0));
      GameId shape = make_game(left, 0, right);
      if (shape_seen.insert(shape).second) fresh.push_back(shape);
      return fresh.size() < limit;
    });
    if (!emit_shapes(fresh)) return out;
    shapes.insert(shapes.end(), fresh.begin(), fresh.end());
  }
  return out;
}

std::optional<ContextWitness> distinguishing_context(GameId g, GameId h, OperatorKind op, const ContextSearch& search) {
  if (g == h) return std::nullopt;
  const ContextClass cls =
      search.contexts.value_or(is_impartial(g) && is_impartial(h) ? ContextClass::Impartial : ContextClass::All);

  std::vector<GameId> candidates{number(0)};
  for (GameId x : {g, h}) {
    if (is_leaf(x)) continue;
    const Score bound = max_abs_score(x) + 2;
    if (!left_options(x).empty()) candidates.push_back(make_game({}, 1, {number(-bound)}));
    if (!right_options(x).empty()) candidates.push_back(make_game({number(bound)}, -1, {}));
  }
  if (cls == ContextClass::Impartial) {
    std::erase_if(candidates, [](GameId x) { return !is_impartial(x); });
  }
  const std::size_t room = search.budget > candidates.size() ? search.budget - candidates.size() : 0;
  for (GameId x : enumerate_contexts(search, cls, room)) candidates.push_back(x);

  std::size_t tried = 0;
  for (GameId x : candidates) {
    if (tried++ >= search.budget) break;
    const GameId with_g[] = {g, x};
    const GameId with_h[] = {h, x};
    const Outcome og = outcome(eval_sum(op, with_g));
    const Outcome oh = outcome(eval_sum(op, with_h));
    if (og != oh) return ContextWitness{x, op, og, oh};
  }
  return std::nullopt;
}

std::vector<GameId> inverse_probes(OperatorKind op, const InverseSearch& search) {
  std::vector<GameId> probes;
  for (const Score& s : sorted_palette(search.palette)) probes.push_back(number(s));
  probes.push_back(identity_game());
  ImpartialParams params;
  params.palette = search.palette;
  for (std::size_t i = 0; i < search.probes; ++i) {
    params.seed = search.seed + i;
    probes.push_back(op == OperatorKind::Sequential ? random_game(params) : random_impartial(params));
  }
  return probes;
}

std::optional<GameId> inverse_search(GameId g, OperatorKind op, const InverseSearch& search) {
  const std::vector<GameId> probes = inverse_probes(op, search);
  auto accepts = [&](GameId y) {
    for (GameId p : probes) {
      const GameId parts[] = {g, y, p};
      if (outcome(eval_sum(op, parts)) != outcome(p)) return false;
    }
    return true;
  };
  std::vector<GameId> candidates{reverse(g)};
  if (op == OperatorKind::Conjunctive && is_impartial(g)) candidates.push_back(conjunctive_inverse(g));
  candidates.push_back(negate(g));
  ContextSearch enumeration;
  enumeration.depth = search.depth;
  enumeration.palette = search.palette;
  for (GameId y : enumerate_contexts(enumeration, ContextClass::Impartial, search.budget)) candidates.push_back(y);

  std::unordered_set<GameId, GameIdHash> tried;
  for (GameId y : candidates) {
    if (!tried.insert(y).second) continue;
    if (accepts(y)) return y;
  }
  return std::nullopt;
}

}  // namespace scoring
