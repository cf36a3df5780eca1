#include <doctest.h>

#include <algorithm>
#include <random>
#include <thread>

#include "scoring/evaluator.hpp"
#include "scoring/game.hpp"
#include "scoring/notation.hpp"
#include "scoring/structure_lab.hpp"

using namespace scoring;

TEST_CASE("leaves and numbers") {
  CHECK(make_game({}, 3, {}) == number(3));
  CHECK(format_game(make_game({}, 3, {})) == "3");
  CHECK(is_leaf(number(Score(1, 2))));
  CHECK(root_score(number(Score(1, 2))) == Score(1, 2));
  CHECK(root_score(number(-2)) == -2);
}

TEST_CASE("option lists have set semantics") {
  CHECK(make_game({number(0), number(0)}, 1, {}) == make_game({number(0)}, 1, {}));
  const GameId a = number(1);
  const GameId b = parse_game("{0|1|2}");
  const GameId c = number(-3);
  CHECK(make_game({a, b, c}, 0, {c, a}) == make_game({c, b, a, b}, 0, {a, c, c}));
  CHECK(left_options(make_game({a, b, c}, 0, {})).size() == 3);
}

TEST_CASE("interning is stable under random permutations and duplicates") {
  std::mt19937_64 rng(7);
  ImpartialParams params;
  for (int trial = 0; trial < 200; ++trial) {
    params.seed = static_cast<std::uint64_t>(trial);
    std::vector<GameId> opts;
    for (int k = 0; k < 5; ++k) {
      params.seed = static_cast<std::uint64_t>(trial * 10 + k);
      opts.push_back(random_game(params));
    }
    const GameId base = make_game(opts, Score(trial, 3), opts);
    std::vector<GameId> shuffled = opts;
    shuffled.push_back(opts[static_cast<std::size_t>(trial) % opts.size()]);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<GameId> other = opts;
    std::shuffle(other.begin(), other.end(), rng);
    CHECK(make_game(shuffled, Score(trial, 3), other) == base);
  }
}

TEST_CASE("unknown ids are rejected") {
  CHECK_THROWS_AS(make_game({GameId{0xFFFFFFF0u}}, 0, {}), std::invalid_argument);
}

TEST_CASE("figure 1 tree round-trips through the printer") {
  const GameId G = make_game({make_game({}, -2, {make_game({}, 3, {make_game({number(1)}, 0, {number(-4)})})})}, 5, {});
  CHECK(format_game(G) == "{{.|-2|{.|3|{1|0|-4}}}|5|.}");
  CHECK(parse_game(format_game(G)) == G);
}

TEST_CASE("negation") {
  CHECK(negate(number(3)) == number(-3));
  CHECK(negate(parse_game("{4|3|2}")) == parse_game("{-2|-3|-4}"));
  CHECK(negate(identity_game()) == identity_game());
}

TEST_CASE("shift") {
  CHECK(shift(number(1), 2) == number(3));
  CHECK(shift(parse_game("{4|3|2}"), -3) == parse_game("{1|0|-1}"));
  const GameId g = parse_game("{{1|2|.},0|1/2|-1}");
  CHECK(shift(g, 0) == g);
  CHECK(shift(shift(g, Score(1, 3)), Score(2, 3)) == shift(g, 1));
}

TEST_CASE("reverse") {
  CHECK(reverse(number(5)) == number(-5));
  CHECK(reverse(parse_game("{4|3|2}")) == parse_game("{-4|-3|-2}"));
  CHECK(reverse(identity_game()) == identity_game());
}

TEST_CASE("transforms are involutions and shifts compose") {
  std::mt19937_64 rng(11);
  ImpartialParams params;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    params.seed = seed;
    const GameId g = random_game(params);
    CHECK(negate(negate(g)) == g);
    CHECK(reverse(reverse(g)) == g);
    const Score a(static_cast<std::int64_t>(rng() % 11) - 5, 1 + static_cast<std::int64_t>(rng() % 3));
    const Score b(static_cast<std::int64_t>(rng() % 11) - 5, 1 + static_cast<std::int64_t>(rng() % 3));
    CHECK(shift(shift(g, a), b) == shift(g, a + b));
  }
}

TEST_CASE("exact scores do not drift") {
  GameId g = parse_game("{1/3|0|-1/3}");
  for (int i = 0; i < 3; ++i) g = shift(g, Score(1, 3));
  CHECK(g == parse_game("{4/3|1|2/3}"));
  CHECK(root_score(g).is_integer());
}

TEST_CASE("canonical order is structural and total") {
  const GameId a = parse_game("{1|0|.}");
  const GameId b = parse_game("{.|0|1}");
  CHECK(structurally_less(a, b) != structurally_less(b, a));
  CHECK(!structurally_less(a, a));
  CHECK(structurally_less(number(5), a));
}

TEST_CASE("concurrent interning yields one id per tree") {
  std::vector<std::vector<GameId>> seen(4);
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < seen.size(); ++t) {
    workers.emplace_back([t, &seen] {
      ImpartialParams params;
      for (std::uint64_t seed = 5000; seed < 5200; ++seed) {
        params.seed = seed;
        seen[t].push_back(random_game(params));
      }
    });
  }
  for (auto& w : workers) w.join();
  for (std::size_t t = 1; t < seen.size(); ++t) CHECK(seen[t] == seen[0]);
}

TEST_CASE("max absolute score") {
  CHECK(max_abs_score(parse_game("{{7|0|.}|-9/2|3}")) == 7);
  CHECK(max_abs_score(number(-2)) == 2);
}
