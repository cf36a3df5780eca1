#include <doctest.h>

#include "scoring/notation.hpp"
#include "scoring/verify.hpp"

using namespace scoring;

TEST_CASE("battery") {
  const auto battery = default_battery();
  CHECK(battery.size() >= 5);
  auto has = [&](const char* text) {
    const OctalRuleset r = parse_octal(text);
    return std::find(battery.begin(), battery.end(), r) != battery.end();
  };
  CHECK(has("0.33:1,2"));
  CHECK(has("0.007:0,0,1"));
}

TEST_CASE("small rationals stay in range") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const Score s = small_rational(rng);
    CHECK(s.denominator() <= 3);
    CHECK(abs(s) <= 9);
  }
}

TEST_CASE("quick regression run passes every check") {
  for (const CheckResult& r : verify_paper(VerifyConfig::quick())) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("literal conjunctive semantics breaks the figure 1 check") {
  VerifyConfig c = VerifyConfig::quick();
  c.semantics.conjunctive = ConjunctiveRule::Literal;
  CHECK(!check_figure1_conjunctive(c).passed);
  CHECK(check_figure2_selective(c).passed);
}

TEST_CASE("check names are unique") {
  std::vector<std::string> names;
  for (const auto& c : paper_checks()) names.push_back(c.name);
  std::sort(names.begin(), names.end());
  CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
}
