#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "scoring/score.hpp"

namespace scoring {

/// Handle into the global game store. Two games have the same id exactly when
/// their canonical trees are structurally identical.
struct GameId {
  std::uint32_t value = 0;

  friend auto operator<=>(const GameId&, const GameId&) = default;
};

struct GameIdHash {
  std::size_t operator()(GameId id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};

/// Optimal-play final scores: Left maximises and Right minimises the L-R score.
struct FinalScores {
  Score left_first;   // Left moves first
  Score right_first;  // Right moves first

  friend bool operator==(const FinalScores&, const FinalScores&) = default;
};

/// Interned node. Option lists are sorted by the structural order and free of
/// duplicates. The derived fields are computed once, when the node is interned.
struct GameNode {
  std::vector<GameId> left;
  Score score;
  std::vector<GameId> right;

  FinalScores final_scores;
  std::uint32_t depth = 0;
  std::uint64_t structural_hash = 0;
};

/// Append-only intern store. Lookups and insertions may come from any thread;
/// insertion takes an exclusive lock, node access by id is lock-free because
/// chunks never move once allocated.
class GameStore {
 public:
  static GameStore& global();

  GameStore();
  GameStore(const GameStore&) = delete;
  GameStore& operator=(const GameStore&) = delete;
  ~GameStore();

  /// Canonicalises (sort + dedupe) and interns. Throws std::invalid_argument
  /// if an option id is not in the store.
  GameId intern(std::vector<GameId> left, Score score, std::vector<GameId> right);

  const GameNode& node(GameId id) const;
  bool contains(GameId id) const;
  std::size_t size() const;

  /// Deterministic structural order: depth, then root score, then a
  /// structural hash, then a full recursive comparison. Independent of
  /// interning order, so printing is reproducible across runs.
  std::strong_ordering compare(GameId a, GameId b) const;

 private:
  static constexpr std::size_t kChunkBits = 12;
  static constexpr std::size_t kChunkSize = std::size_t{1} << kChunkBits;
  static constexpr std::size_t kMaxChunks = std::size_t{1} << 18;

  struct Key {
    std::vector<GameId> left;
    Score score;
    std::vector<GameId> right;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& key) const noexcept;
  };
  using Chunk = std::unique_ptr<GameNode[]>;

  void canonicalise(std::vector<GameId>& options) const;
  GameNode& slot(std::uint32_t index) const;

  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, GameId, KeyHash> index_;
  std::unique_ptr<Chunk[]> chunks_;
  std::uint32_t size_ = 0;
};

GameId make_game(std::vector<GameId> left, Score score, std::vector<GameId> right);
GameId number(Score score);

const GameNode& node(GameId g);
const std::vector<GameId>& left_options(GameId g);
const std::vector<GameId>& right_options(GameId g);
Score root_score(GameId g);
bool is_leaf(GameId g);

/// -G = {-G^R | -G^S | -G^L}.
GameId negate(GameId g);
/// Adds c to every node score.
GameId shift(GameId g, Score c);
/// Negates every node score, keeping Left options on the left.
GameId reverse(GameId g);

/// Largest absolute node score anywhere in the tree.
Score max_abs_score(GameId g);

bool structurally_less(GameId a, GameId b);

}  // namespace scoring
