#include "scoring/game.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace scoring {
namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finaliser over the running state
  std::uint64_t z = h ^ (v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::size_t GameStore::KeyHash::operator()(const Key& key) const noexcept {
  std::uint64_t h = ScoreHash{}(key.score);
  for (GameId id : key.left) h = mix(h, id.value);
  h = mix(h, 0xFFFFFFFFULL);
  for (GameId id : key.right) h = mix(h, id.value);
  return static_cast<std::size_t>(h);
}

GameStore& GameStore::global() {
  static GameStore store;
  return store;
}

GameStore::GameStore() : chunks_(std::make_unique<Chunk[]>(kMaxChunks)) {}

GameStore::~GameStore() = default;

GameNode& GameStore::slot(std::uint32_t index) const {
  return chunks_[index >> kChunkBits][index & (kChunkSize - 1)];
}

bool GameStore::contains(GameId id) const {
  std::shared_lock lock(mutex_);
  return id.value < size_;
}

std::size_t GameStore::size() const {
  std::shared_lock lock(mutex_);
  return size_;
}

const GameNode& GameStore::node(GameId id) const { return slot(id.value); }

std::strong_ordering GameStore::compare(GameId a, GameId b) const {
  if (a == b) return std::strong_ordering::equal;
  const GameNode& x = node(a);
  const GameNode& y = node(b);
  if (auto c = x.depth <=> y.depth; c != 0) return c;
  if (auto c = x.score <=> y.score; c != 0) return c;
  if (auto c = x.structural_hash <=> y.structural_hash; c != 0) return c;
  auto lists = [this](const std::vector<GameId>& p, const std::vector<GameId>& q) {
    for (std::size_t i = 0; i < p.size() && i < q.size(); ++i) {
      if (auto c = compare(p[i], q[i]); c != 0) return c;
    }
    return p.size() <=> q.size();
  };
  if (auto c = lists(x.left, y.left); c != 0) return c;
  return lists(x.right, y.right);
}

void GameStore::canonicalise(std::vector<GameId>& options) const {
  std::sort(options.begin(), options.end(), [this](GameId a, GameId b) { return compare(a, b) < 0; });
  options.erase(std::unique(options.begin(), options.end()), options.end());
}

GameId GameStore::intern(std::vector<GameId> left, Score score, std::vector<GameId> right) {
  {
    std::shared_lock lock(mutex_);
    for (const auto* side : {&left, &right}) {
      for (GameId id : *side) {
        if (id.value >= size_) {
          throw std::invalid_argument("unknown game id " + std::to_string(id.value));
        }
      }
    }
  }
  canonicalise(left);
  canonicalise(right);

  Key key{std::move(left), score, std::move(right)};
  {
    std::shared_lock lock(mutex_);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
  }

  GameNode fresh;
  fresh.score = key.score;
  fresh.final_scores = {key.score, key.score};
  std::uint64_t h = mix(0, ScoreHash{}(key.score));
  std::uint32_t depth = 0;
  for (std::size_t i = 0; i < key.left.size(); ++i) {
    const GameNode& child = node(key.left[i]);
    depth = std::max(depth, child.depth + 1);
    h = mix(h, child.structural_hash);
    Score reply = child.final_scores.right_first;
    if (i == 0 || reply > fresh.final_scores.left_first) fresh.final_scores.left_first = reply;
  }
  h = mix(h, 0x5EEDULL);
  for (std::size_t i = 0; i < key.right.size(); ++i) {
    const GameNode& child = node(key.right[i]);
    depth = std::max(depth, child.depth + 1);
    h = mix(h, child.structural_hash);
    Score reply = child.final_scores.left_first;
    if (i == 0 || reply < fresh.final_scores.right_first) fresh.final_scores.right_first = reply;
  }
  fresh.depth = depth;
  fresh.structural_hash = h;
  fresh.left = key.left;
  fresh.right = key.right;

  std::unique_lock lock(mutex_);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  std::uint32_t index = size_;
  if ((index >> kChunkBits) >= kMaxChunks) throw std::length_error("game store exhausted");
  Chunk& chunk = chunks_[index >> kChunkBits];
  if (!chunk) chunk = std::make_unique<GameNode[]>(kChunkSize);
  chunk[index & (kChunkSize - 1)] = std::move(fresh);
  GameId id{index};
  index_.emplace(std::move(key), id);
  ++size_;
  return id;
}

GameId make_game(std::vector<GameId> left, Score score, std::vector<GameId> right) {
  return GameStore::global().intern(std::move(left), score, std::move(right));
}

GameId number(Score score) { return make_game({}, score, {}); }

const GameNode& node(GameId g) { return GameStore::global().node(g); }
const std::vector<GameId>& left_options(GameId g) { return node(g).left; }
const std::vector<GameId>& right_options(GameId g) { return node(g).right; }
Score root_score(GameId g) { return node(g).score; }
bool is_leaf(GameId g) { return node(g).left.empty() && node(g).right.empty(); }

bool structurally_less(GameId a, GameId b) { return GameStore::global().compare(a, b) < 0; }

namespace {

// Rebuilds a tree bottom-up; `edit` maps (node, transformed left, transformed
// right) to the new game. Shared subtrees are transformed once.
template <typename Edit>
GameId rebuild(GameId g, std::unordered_map<GameId, GameId, GameIdHash>& memo, Edit& edit) {
  if (auto it = memo.find(g); it != memo.end()) return it->second;
  const GameNode& n = node(g);
  std::vector<GameId> left;
  std::vector<GameId> right;
  left.reserve(n.left.size());
  right.reserve(n.right.size());
  for (GameId o : n.left) left.push_back(rebuild(o, memo, edit));
  for (GameId o : n.right) right.push_back(rebuild(o, memo, edit));
  GameId result = edit(n, std::move(left), std::move(right));
  memo.emplace(g, result);
  return result;
}

}  // namespace

GameId negate(GameId g) {
  std::unordered_map<GameId, GameId, GameIdHash> memo;
  auto edit = [](const GameNode& n, std::vector<GameId> left, std::vector<GameId> right) {
    return make_game(std::move(right), -n.score, std::move(left));
  };
  return rebuild(g, memo, edit);
}

GameId shift(GameId g, Score c) {
  if (c == 0) return g;
  std::unordered_map<GameId, GameId, GameIdHash> memo;
  auto edit = [&c](const GameNode& n, std::vector<GameId> left, std::vector<GameId> right) {
    return make_game(std::move(left), n.score + c, std::move(right));
  };
  return rebuild(g, memo, edit);
}

GameId reverse(GameId g) {
  std::unordered_map<GameId, GameId, GameIdHash> memo;
  auto edit = [](const GameNode& n, std::vector<GameId> left, std::vector<GameId> right) {
    return make_game(std::move(left), -n.score, std::move(right));
  };
  return rebuild(g, memo, edit);
}

Score max_abs_score(GameId g) {
  std::unordered_map<GameId, Score, GameIdHash> memo;
  std::function<Score(GameId)> walk = [&](GameId x) -> Score {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    const GameNode& n = node(x);
    Score best = abs(n.score);
    for (GameId o : n.left) best = std::max(best, walk(o));
    for (GameId o : n.right) best = std::max(best, walk(o));
    memo.emplace(x, best);
    return best;
  };
  return walk(g);
}

}  // namespace scoring
