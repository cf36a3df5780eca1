#include <doctest.h>

#include "scoring/notation.hpp"
#include "scoring/structure_lab.hpp"

using namespace scoring;

namespace {

std::size_t error_position(const char* text) {
  try {
    parse_game(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("games from the text") {
  const GameId g = parse_game("{0|1|2}");
  CHECK(left_options(g) == std::vector<GameId>{number(0)});
  CHECK(root_score(g) == 1);
  CHECK(right_options(g) == std::vector<GameId>{number(2)});
  CHECK(parse_game("{.|5|.}") == parse_game("5"));
  CHECK(format_game(parse_game("{ .|5|. }")) == "5");
  const GameId g41 = parse_game("{1,{0|0|0}|0|{0|0|0},-1}");
  CHECK(left_options(g41).size() == 2);
  CHECK(right_options(g41).size() == 2);
  CHECK(format_game(number(0)) == "0");
}

TEST_CASE("whitespace and rationals") {
  CHECK(parse_game("  { 1/2 , -3 | +4/6 | . } ") == make_game({number(Score(1, 2)), number(-3)}, Score(2, 3), {}));
  CHECK(format_game(parse_game("{-6/4|0|.}")) == "{-3/2|0|.}");
}

TEST_CASE("syntax errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_game("{1|2}"), doctest::Contains("expected '|' at position 4"), ParseError);
  CHECK_THROWS_WITH_AS(parse_game("1/0"), doctest::Contains("zero denominator"), ParseError);
  CHECK_THROWS_WITH_AS(parse_game("{|0|.}"), doctest::Contains("write '.'"), ParseError);
  CHECK_THROWS_AS(parse_game("{1|0|2} 3"), ParseError);
  CHECK_THROWS_AS(parse_game(""), ParseError);
  CHECK_THROWS_AS(parse_game("{1|0|2"), ParseError);
  CHECK_THROWS_AS(parse_game("{1|x|2}"), ParseError);
  CHECK_THROWS_AS(parse_game("1/"), ParseError);
  CHECK(error_position("{1|0|2} 3") == 8);
  CHECK(error_position("{1|2}") == 4);
}

TEST_CASE("game files") {
  const auto games = parse_game_lines("# header\n{4|3|2}\n\n  0  # zero\n1/2\n");
  REQUIRE(games.size() == 3);
  CHECK(games[0] == parse_game("{4|3|2}"));
  CHECK(games[2] == number(Score(1, 2)));
  CHECK_THROWS_WITH_AS(parse_game_lines("1\n{1|2}\n"), doctest::Contains("line 2"), ParseError);
}

TEST_CASE("round trip over random trees") {
  ImpartialParams p;
  p.max_depth = 6;
  p.max_branching = 3;
  p.palette = {-2, Score(-1, 3), 0, Score(5, 2), 1};
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    p.seed = seed;
    const GameId g = random_game(p);
    const std::string text = format_game(g);
    CHECK(parse_game(text) == g);
    CHECK(format_game(parse_game(text)) == text);
  }
}

TEST_CASE("octal rulesets") {
  const OctalRuleset a = parse_octal("0.33:1,2");
  CHECK(a.digits == std::vector<std::uint8_t>{3, 3});
  CHECK(a.points == std::vector<Score>{1, 2});
  const OctalRuleset b = parse_octal("0.337");
  CHECK(b.digits == std::vector<std::uint8_t>{3, 3, 7});
  CHECK(b.points == std::vector<Score>{1, 2, 0});
  CHECK(parse_octal("33:1, 2") == a);
  CHECK(parse_octal("0.4:-1/2").points == std::vector<Score>{Score(-1, 2)});
  CHECK(format_octal(parse_octal("0.07:0,1/2")) == "0.07:0,1/2");
  CHECK(parse_octal("0.1234567").points == std::vector<Score>{1, 2, 3, 0, 0, 0, 0});
  CHECK_THROWS_WITH_AS(parse_octal("0.39:1,2"), doctest::Contains("digit 9"), ParseError);
  CHECK_THROWS_AS(parse_octal("0.33:1"), ParseError);
  CHECK_THROWS_AS(parse_octal("0.33:1,2,3"), ParseError);
  CHECK_THROWS_AS(parse_octal("0.00:1,1"), ParseError);
  CHECK_THROWS_AS(parse_octal("0."), ParseError);
  CHECK_THROWS_AS(parse_octal("0.3:x"), ParseError);
}
