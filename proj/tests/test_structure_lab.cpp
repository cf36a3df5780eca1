#include <doctest.h>

#include "scoring/evaluator.hpp"
#include "scoring/notation.hpp"
#include "scoring/operators.hpp"
#include "scoring/structure_lab.hpp"

using namespace scoring;

TEST_CASE("impartiality") {
  CHECK(is_impartial(parse_game("{4|3|2}")));
  CHECK(is_impartial(identity_game()));
  CHECK(is_impartial(number(7)));
  CHECK(!is_impartial(parse_game("{1|0|1}")));
  CHECK(!is_impartial(parse_game("{1|0|.}")));
  CHECK(is_impartial(parse_game("{0,4|2|0,4}")));
  CHECK(!is_impartial(parse_game("{{2|1|1}|0|{0|-1|-2}}")));
}

TEST_CASE("generator") {
  ImpartialParams p;
  p.leaf_probability = 1.0;
  p.seed = 3;
  CHECK(is_leaf(random_impartial(p)));
  p = {};
  p.max_depth = 1;
  p.max_branching = 1;
  p.leaf_probability = 0.0;
  p.palette = {1};
  CHECK(random_impartial(p) == parse_game("{2|1|0}"));
  p = {};
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    p.seed = seed;
    const GameId g = random_impartial(p);
    CHECK(is_impartial(g));
    const FinalScores fs = final_scores(g);
    CHECK(fs.left_first + fs.right_first == root_score(g) * 2);
  }
  p.seed = 42;
  CHECK(random_impartial(p) == random_impartial(p));
  p.palette.clear();
  CHECK_THROWS_AS(random_impartial(p), std::invalid_argument);
}

TEST_CASE("conjunctive inverse") {
  CHECK(conjunctive_inverse(number(3)) == number(-3));
  CHECK(conjunctive_inverse(parse_game("{4|3|2}")) == parse_game("{-4|-3|-2}"));
  const GameId g = parse_game("{{2|1|0}|0|{0|-1|-2}}");
  CHECK(conjunctive_inverse(g) == reverse(g));
  CHECK(outcome(eval_sum(OperatorKind::Conjunctive, std::vector<GameId>{g, reverse(g)})) == Outcome::Tie);
  const GameId g4 = parse_game("{4|3|2}");
  CHECK(eval_sum(OperatorKind::Conjunctive, std::vector<GameId>{g4, negate(g4)}).left_first == 2);
  CHECK_THROWS_AS(conjunctive_inverse(parse_game("{1|0|1}")), std::invalid_argument);
}

TEST_CASE("reversal is not always the inverse") {
  const GameId g = parse_game("{0,4|2|0,4}");
  CHECK(eval_sum(OperatorKind::Conjunctive, std::vector<GameId>{g, reverse(g)}) == FinalScores{4, -4});
  const GameId inv = conjunctive_inverse(g);
  CHECK(inv == parse_game("{-4|-2|0}"));
  CHECK(is_impartial(inv));
  CHECK(outcome(eval_sum(OperatorKind::Conjunctive, std::vector<GameId>{g, inv})) == Outcome::Tie);
}

TEST_CASE("inverse contract over generated games") {
  ImpartialParams p;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    p.seed = seed;
    const GameId g = random_impartial(p);
    const GameId h = conjunctive_inverse(g);
    const FinalScores fs = final_scores(g);
    CHECK(is_impartial(h));
    CHECK(final_scores(h) == FinalScores{-fs.left_first, -fs.right_first});
    CHECK(outcome(eval_sum(OperatorKind::Conjunctive, std::vector<GameId>{g, h})) == Outcome::Tie);
  }
}

TEST_CASE("impartial components add under the conjunctive sum") {
  ImpartialParams p;
  p.max_depth = 3;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    p.seed = seed;
    const GameId g = random_impartial(p);
    p.seed = seed + 50000;
    const GameId h = random_impartial(p);
    const FinalScores a = final_scores(g);
    const FinalScores b = final_scores(h);
    CHECK(eval_sum(OperatorKind::Conjunctive, std::vector<GameId>{g, h}) ==
          FinalScores{a.left_first + b.left_first, a.right_first + b.right_first});
  }
}

TEST_CASE("identity tests") {
  ImpartialParams p;
  const IdentityReport sel = identity_test(identity_game(), OperatorKind::Selective, 200, p);
  CHECK(sel.passed == 200);
  CHECK(!sel.first_failure);
  const IdentityReport seq = identity_test(identity_game(), OperatorKind::Sequential, 200, p);
  CHECK(seq.passed == 200);
  for (OperatorKind op : kAllOperators) {
    const IdentityReport one = identity_test(number(1), op, 50, p);
    REQUIRE(one.first_failure);
    CHECK(one.passed < 50);
    CHECK(one.pass_fraction() < 1.0);
  }
}

TEST_CASE("nonzero witnesses") {
  const ContextWitness leaf = nonzero_witness(number(2), OperatorKind::Conjunctive);
  CHECK(leaf.context == number(0));
  CHECK(leaf.with_g == Outcome::Left);
  CHECK(leaf.with_h == Outcome::Tie);

  const GameId g = parse_game("{0|0|.}");
  for (OperatorKind op : {OperatorKind::Conjunctive, OperatorKind::Selective}) {
    const ContextWitness w = nonzero_witness(g, op);
    CHECK(w.context == parse_game("{.|1|-2}"));
    CHECK(w.with_h == Outcome::Next);
    CHECK(w.with_g != w.with_h);
  }
  CHECK(eval_sum(OperatorKind::Conjunctive, std::vector<GameId>{g, parse_game("{.|1|-2}")}).left_first == -2);

  const ContextWitness mirrored = nonzero_witness(parse_game("{.|0|3}"), OperatorKind::Selective);
  CHECK(mirrored.context == parse_game("{5|-1|.}"));
  CHECK(mirrored.with_g != mirrored.with_h);

  CHECK_THROWS_AS(nonzero_witness(number(0), OperatorKind::Conjunctive), std::invalid_argument);
  CHECK_THROWS_AS(nonzero_witness(number(1), OperatorKind::Disjunctive), std::invalid_argument);
}

TEST_CASE("witnesses over random games") {
  ImpartialParams p;
  std::size_t tried = 0;
  for (std::uint64_t seed = 0; tried < 200; ++seed) {
    p.seed = seed;
    const GameId g = random_game(p);
    if (g == number(0)) continue;
    ++tried;
    for (OperatorKind op : {OperatorKind::Conjunctive, OperatorKind::Selective}) {
      const ContextWitness w = nonzero_witness(g, op);
      CHECK(outcome(eval_sum(op, std::vector<GameId>{g, w.context})) != outcome(w.context));
    }
  }
}

TEST_CASE("distinguishing contexts") {
  const GameId g = parse_game("{4|3|2}");
  CHECK(!distinguishing_context(g, g, OperatorKind::Conjunctive));
  for (OperatorKind op : kAllOperators) {
    const auto w = distinguishing_context(number(1), number(0), op);
    REQUIRE(w);
    CHECK(w->context == number(0));
    CHECK(w->with_g == Outcome::Left);
    CHECK(w->with_h == Outcome::Tie);
  }
  ContextSearch deep;
  deep.depth = 3;
  deep.budget = 3000;
  CHECK(!distinguishing_context(identity_game(), number(0), OperatorKind::Selective, deep));

  ContextSearch general;
  general.contexts = ContextClass::All;
  const auto found = distinguishing_context(identity_game(), number(0), OperatorKind::Selective, general);
  REQUIRE(found);
  CHECK(found->with_g != found->with_h);
}

TEST_CASE("context enumeration is deterministic and bounded") {
  ContextSearch s;
  const auto a = enumerate_contexts(s, ContextClass::All, 500);
  const auto b = enumerate_contexts(s, ContextClass::All, 500);
  CHECK(a == b);
  CHECK(a.size() == 500);
  for (GameId x : enumerate_contexts(s, ContextClass::Impartial, 300)) CHECK(is_impartial(x));
}

TEST_CASE("inverse search") {
  CHECK(inverse_search(number(3), OperatorKind::Conjunctive) == number(-3));
  CHECK(inverse_search(parse_game("{4|3|2}"), OperatorKind::Conjunctive) == parse_game("{-4|-3|-2}"));
  InverseSearch small;
  small.budget = 300;
  CHECK(!inverse_search(parse_game("{1,{0|0|0}|0|{0|0|0},-1}"), OperatorKind::Sequential, small));
}
