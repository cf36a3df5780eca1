#include <doctest.h>

#include "scoring/evaluator.hpp"
#include "scoring/notation.hpp"
#include "scoring/structure_lab.hpp"
#include "support.hpp"

using namespace scoring;

TEST_CASE("final scores of worked examples") {
  CHECK(final_scores(number(Score(-7, 2))) == FinalScores{Score(-7, 2), Score(-7, 2)});
  CHECK(final_scores(parse_game("{{.|-2|{.|3|{1|0|-4}}}|5|.}")) == FinalScores{3, 5});
  CHECK(final_scores(parse_game("{.|2|{{{6|4|.}|-1|.}|7|.}}")) == FinalScores{2, -1});
  CHECK(final_scores(parse_game("{4|3|2}")) == FinalScores{4, 2});
}

TEST_CASE("outcome classes") {
  CHECK(outcome(number(0)) == Outcome::Tie);
  CHECK(outcome(parse_game("{4|3|2}")) == Outcome::Left);
  CHECK(outcome(parse_game("{-1|0|1}")) == Outcome::Previous);
  CHECK(outcome(parse_game("{1|0|-1}")) == Outcome::Next);
  CHECK(outcome(number(-1)) == Outcome::Right);
}

TEST_CASE("sign table covers all nine sign pairs") {
  const Score s[] = {-1, 0, 1};
  const Outcome want[3][3] = {
      {Outcome::Right, Outcome::Right, Outcome::Previous},
      {Outcome::Right, Outcome::Tie, Outcome::Left},
      {Outcome::Next, Outcome::Left, Outcome::Left},
  };
  for (int l = 0; l < 3; ++l) {
    for (int r = 0; r < 3; ++r) CHECK(outcome(FinalScores{s[l], s[r]}) == want[l][r]);
  }
}

TEST_CASE("mirror swaps L and R only") {
  CHECK(mirror(Outcome::Left) == Outcome::Right);
  CHECK(mirror(Outcome::Right) == Outcome::Left);
  CHECK(mirror(Outcome::Next) == Outcome::Next);
  CHECK(mirror(Outcome::Previous) == Outcome::Previous);
  CHECK(mirror(Outcome::Tie) == Outcome::Tie);
  CHECK(to_string(Outcome::Tie) == "Tie");
}

TEST_CASE("cached final scores agree with plain minimax") {
  ImpartialParams params;
  params.max_depth = 5;
  params.palette = {-3, Score(-1, 2), 0, 1, Score(5, 3)};
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    params.seed = seed;
    const GameId g = random_game(params);
    CAPTURE(format_game(g));
    CHECK(final_scores(g).left_first == oracle::naive_final(g, true));
    CHECK(final_scores(g).right_first == oracle::naive_final(g, false));
  }
}

TEST_CASE("principal line follows optimal moves") {
  const GameId g = parse_game("{{.|-2|{.|3|{1|0|-4}}}|5|.}");
  const auto line = principal_line(g, Side::Left);
  REQUIRE(line.size() == 3);
  CHECK(line.back() == parse_game("{.|3|{1|0|-4}}"));
  CHECK(!best_option(number(1), Side::Left));
  CHECK(best_option(parse_game("{0,4|2|.}"), Side::Left) == number(4));
}
