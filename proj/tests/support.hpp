#pragma once

// Independent reference implementations used as test oracles. They share only
// the game store and move generation with the library and recompute
// everything else by plain recursion.

#include <algorithm>
#include <map>
#include <vector>

#include "scoring/game.hpp"
#include "scoring/octal.hpp"
#include "scoring/operators.hpp"

namespace oracle {

using scoring::GameId;
using scoring::OperatorKind;
using scoring::Score;

inline const std::vector<GameId>& options(GameId g, bool left) {
  return left ? scoring::left_options(g) : scoring::right_options(g);
}

/// Plain minimax straight from the definition, no caching.
inline Score naive_final(GameId g, bool left_moves) {
  const auto& opts = options(g, left_moves);
  if (opts.empty()) return scoring::root_score(g);
  Score best = naive_final(opts.front(), !left_moves);
  for (GameId o : opts) {
    const Score v = naive_final(o, !left_moves);
    best = left_moves ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

// Every way to pick one option in each listed component.
inline void product(const std::vector<GameId>& comps, const std::vector<std::size_t>& movers, bool left,
                    std::vector<std::vector<GameId>>& out) {
  std::vector<GameId> cur = comps;
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == movers.size()) {
      out.push_back(cur);
      return;
    }
    for (GameId o : options(comps[movers[k]], left)) {
      cur[movers[k]] = o;
      self(self, k + 1);
    }
    cur[movers[k]] = comps[movers[k]];
  };
  rec(rec, 0);
}

inline std::vector<std::vector<GameId>> successors(OperatorKind op, const std::vector<GameId>& comps, bool left) {
  std::vector<std::vector<GameId>> out;
  std::vector<std::size_t> movable;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!options(comps[i], left).empty()) movable.push_back(i);
  }
  switch (op) {
    case OperatorKind::Disjunctive:
      for (std::size_t i : movable) product(comps, {i}, left, out);
      break;
    case OperatorKind::Conjunctive:
      if (!movable.empty()) product(comps, movable, left, out);
      break;
    case OperatorKind::Selective:
      for (std::size_t mask = 1; mask < (std::size_t{1} << movable.size()); ++mask) {
        std::vector<std::size_t> chosen;
        for (std::size_t b = 0; b < movable.size(); ++b) {
          if (mask >> b & 1) chosen.push_back(movable[b]);
        }
        product(comps, chosen, left, out);
      }
      break;
    case OperatorKind::Sequential: {
      std::size_t front = 0;
      while (front + 1 < comps.size() && scoring::is_leaf(comps[front])) ++front;
      if (!options(comps[front], left).empty()) product(comps, {front}, left, out);
      break;
    }
  }
  return out;
}

/// Final score of the composite with `left` to move, by direct recursion over
/// component tuples.
inline Score naive_sum(OperatorKind op, const std::vector<GameId>& comps, bool left) {
  const auto next = successors(op, comps, left);
  if (next.empty()) {
    Score total = 0;
    for (GameId g : comps) total += scoring::root_score(g);
    return total;
  }
  Score best = naive_sum(op, next.front(), !left);
  for (const auto& s : next) {
    const Score v = naive_sum(op, s, !left);
    best = left ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

/// G_s by enumerating per-heap move tuples without grouping or dead-heap
/// removal. Heap sizes only; one ruleset.
class NaiveGs {
 public:
  NaiveGs(const scoring::OctalRuleset& rules, OperatorKind op) : rules_(rules), op_(op) {}

  Score value(std::vector<std::uint32_t> heaps) {
    std::erase(heaps, 0u);
    if (op_ != OperatorKind::Sequential) std::sort(heaps.begin(), heaps.end());
    if (heaps.empty()) return 0;
    if (auto it = memo_.find(heaps); it != memo_.end()) return it->second;

    std::vector<std::vector<scoring::HeapMove>> moves;
    for (std::uint32_t h : heaps) moves.push_back(scoring::heap_moves(rules_, h));

    bool any = false;
    Score best = 0;
    auto consider = [&](const Score& points, const std::vector<std::uint32_t>& next) {
      const Score v = points - value(next);
      if (!any || v > best) best = v;
      any = true;
    };
    // choice[i] == moves[i].size() means heap i is left alone.
    std::vector<std::size_t> choice(heaps.size(), 0);
    auto rec = [&](auto& self, std::size_t i, Score points, std::vector<std::uint32_t>& next, std::size_t moved,
                   std::size_t live) -> void {
      if (i == heaps.size()) {
        bool legal = false;
        switch (op_) {
          case OperatorKind::Disjunctive: legal = moved == 1; break;
          case OperatorKind::Conjunctive: legal = moved >= 1 && moved == live; break;
          case OperatorKind::Selective: legal = moved >= 1; break;
          case OperatorKind::Sequential: legal = false; break;
        }
        if (legal) consider(points, next);
        return;
      }
      const std::size_t is_live = moves[i].empty() ? 0 : 1;
      for (const scoring::HeapMove& mv : moves[i]) {
        const std::size_t mark = next.size();
        next.insert(next.end(), mv.remainder.begin(), mv.remainder.end());
        self(self, i + 1, points + mv.points, next, moved + 1, live + is_live);
        next.resize(mark);
      }
      next.push_back(heaps[i]);
      self(self, i + 1, points, next, moved, live + is_live);
      next.pop_back();
    };
    if (op_ == OperatorKind::Sequential) {
      for (std::size_t i = 0; i < heaps.size(); ++i) {
        if (moves[i].empty()) continue;
        for (const scoring::HeapMove& mv : moves[i]) {
          std::vector<std::uint32_t> next(mv.remainder.begin(), mv.remainder.end());
          next.insert(next.end(), heaps.begin() + static_cast<std::ptrdiff_t>(i) + 1, heaps.end());
          consider(mv.points, next);
        }
        break;
      }
    } else {
      std::vector<std::uint32_t> next;
      rec(rec, 0, Score(0), next, 0, 0);
    }
    memo_.emplace(heaps, best);
    return best;
  }

 private:
  scoring::OctalRuleset rules_;
  OperatorKind op_;
  std::map<std::vector<std::uint32_t>, Score> memo_;
};

}  // namespace oracle
