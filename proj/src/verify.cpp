#include "scoring/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "scoring/evaluator.hpp"
#include "scoring/notation.hpp"
#include "scoring/structure_lab.hpp"

namespace scoring {

VerifyConfig VerifyConfig::quick() {
  VerifyConfig c;
  c.figure_assignments = 20;
  c.sequential_games = 50;
  c.group_games = 20;
  c.group_probes = 10;
  c.additivity_bound = 12;
  c.selective_bound = 8;
  c.oracle_beans = 7;
  c.property_games = 100;
  c.witness_games = 30;
  c.battery_n_max = 60;
  c.battery_limits = {100'000, 200'000};
  return c;
}

std::vector<OctalRuleset> default_battery() {
  std::vector<OctalRuleset> out;
  for (const char* text : {"0.33:1,2", "0.007:0,0,1", "0.333:1,2,3", "0.123", "0.33:2,-1", "0.31:1/2,3"}) {
    out.push_back(parse_octal(text));
  }
  return out;
}

Score small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-9, 9);
  std::uniform_int_distribution<std::int64_t> den(1, 3);
  const std::int64_t n = num(rng);
  return Score(n, den(rng));
}

namespace {

// Collects the number of checked instances and the first failure.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok) {
      ++failed_;
      if (first_.empty()) first_ = what;
    }
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }

  CheckResult result(const std::string& unit = "instances") const {
    std::ostringstream detail;
    detail << checked_ - failed_ << "/" << checked_ << ' ' << unit << " hold";
    if (!notes_.empty()) detail << "; " << notes_;
    if (!first_.empty()) detail << "; first failure: " << first_;
    return {name_, failed_ == 0 && checked_ > 0, detail.str()};
  }

 private:
  std::string name_;
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::string first_;
  std::string notes_;
};

std::string show(const FinalScores& fs) {
  return "(" + fs.left_first.to_string() + ", " + fs.right_first.to_string() + ")";
}

std::mt19937_64 stream(const VerifyConfig& config, std::uint64_t salt) {
  std::seed_seq seq{config.seed, salt};
  return std::mt19937_64(seq);
}

ImpartialParams probe_params(std::uint64_t seed) {
  ImpartialParams p;
  p.seed = seed;
  return p;
}

FinalScores eval2(OperatorKind op, GameId a, GameId b, const Semantics& semantics) {
  const GameId parts[] = {a, b};
  return eval_sum(op, parts, semantics);
}

bool expect_scores(Tally& tally, const std::string& label, const FinalScores& got, const Score& sl, const Score& sr) {
  const bool ok = got.left_first == sl && got.right_first == sr;
  tally.expect(ok, label + " gave " + show(got) + ", expected (" + sl.to_string() + ", " + sr.to_string() + ")");
  return ok;
}

std::string describe(const OctalRuleset& rules) { return format_octal(rules); }

std::string heaps_text(const std::vector<std::uint32_t>& sizes) {
  std::string out = "[";
  for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? "," : "") + std::to_string(sizes[i]);
  return out + "]";
}

// Non-increasing sequences of positive sizes with sum <= budget, shortest first
// within each prefix.
void for_each_multiset(std::uint32_t budget, const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto& self, std::uint32_t left, std::uint32_t max_part) -> void {
    for (std::uint32_t part = std::min(left, max_part); part >= 1; --part) {
      cur.push_back(part);
      fn(cur);
      self(self, left - part, part);
      cur.pop_back();
    }
  };
  rec(rec, budget, budget);
}

void for_each_composition(std::uint32_t budget, const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto& self, std::uint32_t left) -> void {
    for (std::uint32_t part = 1; part <= left; ++part) {
      cur.push_back(part);
      fn(cur);
      self(self, left - part);
      cur.pop_back();
    }
  };
  rec(rec, budget);
}

}  // namespace

CheckResult check_worked_examples(const VerifyConfig& config) {
  Tally t("worked-examples");
  auto game = [](const char* text) { return parse_game(text); };
  expect_scores(t, "{4|3|2}", final_scores(game("{4|3|2}")), 4, 2);
  t.expect(outcome(game("{4|3|2}")) == Outcome::Left, "{4|3|2} is not in L");
  t.expect(outcome(game("0")) == Outcome::Tie, "0 is not a tie");
  expect_scores(t, "Figure-1 G", final_scores(game("{{.|-2|{.|3|{1|0|-4}}}|5|.}")), 3, 5);
  {
    const GameId parts[] = {game("{{.|-2|{.|3|{1|0|-4}}}|5|.}"), game("{.|2|{{{6|4|.}|-1|.}|7|.}}")};
    expect_scores(t, "Figure-1 conjunctive instance", eval_sum(OperatorKind::Conjunctive, parts, config.semantics), 5,
                  7);
  }
  {
    const GameId parts[] = {number(1), number(1)};
    t.expect(sum(OperatorKind::Sequential, parts) == number(2), "1 (seq) 1 is not 2");
  }
  t.expect(negate(game("{4|3|2}")) == game("{-2|-3|-4}"), "negate({4|3|2})");
  t.expect(reverse(game("{4|3|2}")) == game("{-4|-3|-2}"), "reverse({4|3|2})");
  t.expect(conjunctive_inverse(game("{4|3|2}")) == game("{-4|-3|-2}"), "conjunctive_inverse({4|3|2})");
  {
    const GameId g = game("{4|3|2}");
    expect_scores(t, "{4|3|2} conj negate", eval2(OperatorKind::Conjunctive, g, negate(g), config.semantics), 2, -2);
  }

  const OctalRuleset r = parse_octal("0.33:1,2");
  const RulesetId id = intern_ruleset(r);
  const std::vector<Score> anchor{0, 1, 2, 1, 0, 1, 2, 1, 0, 1, 2, 1, 0};
  const GsTable table = gs_table(OperatorKind::Disjunctive, id, 12);
  t.expect(table.values == anchor, "0.33:1,2 disjunctive table differs from 0,1,2,1,0,...");
  t.expect(gs(OperatorKind::Conjunctive, Position::of(id, {2, 3})) == 3, "G_s(2 conj 3) under 0.33:1,2");
  t.expect(gs(SeqPosition::of(id, {2, 3})) == 1, "G_s(2 seq 3) under 0.33:1,2");
  t.expect(final_scores(gs_to_game(r, 3)).left_first == 1, "tree of heap 3 under 0.33:1,2");
  t.expect(gs_to_game(r, 1) == game("{1|0|-1}"), "tree of heap 1 under 0.33:1,2");
  const OctalRuleset r337 = parse_octal("0.337");
  t.expect(r337.points == std::vector<Score>{1, 2, 0}, "default points of 0.337");
  t.expect(r337.reference_period() == std::optional<std::size_t>{6}, "reference period of 0.337");
  return t.result("examples");
}

CheckResult check_figure1_conjunctive(const VerifyConfig& config) {
  Tally t("figure1-conjunctive");
  auto rng = stream(config, 1);
  for (std::size_t i = 0; i < config.figure_assignments; ++i) {
    Score v[11];
    for (Score& x : v) x = small_rational(rng);
    const auto& [a, b, c, d, e, f, g, h, i2, j, k] = v;
    const GameId G = make_game({make_game({}, b, {make_game({}, c, {make_game({number(e)}, d, {number(f)})})})}, a, {});
    const GameId H = make_game({}, g, {make_game({make_game({make_game({number(k)}, j, {})}, i2, {})}, h, {})});
    const std::string tag = "assignment " + std::to_string(i);
    expect_scores(t, tag + " G", final_scores(G), c, a);
    expect_scores(t, tag + " H", final_scores(H), g, i2);
    const GameId parts[] = {G, H};
    expect_scores(t, tag + " G conj H", final_scores(sum(OperatorKind::Conjunctive, parts, config.semantics)), e + j,
                  e + k);
  }
  return t.result("identities");
}

CheckResult check_figure2_selective(const VerifyConfig& config) {
  Tally t("figure2-selective");
  auto rng = stream(config, 2);
  for (std::size_t i = 0; i < config.figure_assignments; ++i) {
    Score v[7];
    for (Score& x : v) x = small_rational(rng);
    const auto& [a, b, c, d, e, f, g] = v;
    const GameId G = make_game({make_game({number(c)}, b, {})}, a, {});
    const GameId H = make_game({}, d, {make_game({}, e, {make_game({}, f, {number(g)})})});
    const std::string tag = "assignment " + std::to_string(i);
    expect_scores(t, tag + " G", final_scores(G), b, a);
    expect_scores(t, tag + " H", final_scores(H), d, e);
    const GameId parts[] = {G, H};
    expect_scores(t, tag + " G sel H", final_scores(sum(OperatorKind::Selective, parts, config.semantics)), c + f,
                  c + g);
  }
  return t.result("identities");
}

CheckResult check_sequential_gadget(const VerifyConfig& config) {
  Tally t("sequential-gadget");
  auto rng = stream(config, 3);
  for (std::size_t i = 0; i < config.figure_assignments; ++i) {
    Score v[6];
    for (Score& x : v) x = small_rational(rng);
    const auto& [a, b, c, d, e, f] = v;
    const GameId G = make_game({make_game({number(c)}, b, {})}, a, {});
    const GameId H = make_game({number(e)}, d, {number(f)});
    const GameId parts[] = {G, H};
    expect_scores(t, "assignment " + std::to_string(i), final_scores(sum(OperatorKind::Sequential, parts)), b + d,
                  a + d);
  }
  return t.result("identities");
}

CheckResult check_sequential_identity(const VerifyConfig& config) {
  Tally t("sequential-identity");
  const GameId i = identity_game();
  for (std::size_t n = 0; n < config.sequential_games; ++n) {
    ImpartialParams p = probe_params(config.seed + n);
    p.max_depth = config.sequential_depth;
    const GameId g = random_game(p);
    const FinalScores want = final_scores(g);
    const GameId before[] = {i, g};
    const GameId after[] = {g, i};
    const std::string text = format_game(g);
    expect_scores(t, "i seq " + text, final_scores(sum(OperatorKind::Sequential, before)), want.left_first,
                  want.right_first);
    expect_scores(t, text + " seq i", final_scores(sum(OperatorKind::Sequential, after)), want.left_first,
                  want.right_first);
  }
  return t.result("games");
}

CheckResult check_selective_identity(const VerifyConfig& config) {
  const IdentityReport report =
      identity_test(identity_game(), OperatorKind::Selective, config.group_games, probe_params(config.seed));
  std::string detail = std::to_string(report.passed) + "/" + std::to_string(report.samples) + " probes hold";
  if (report.first_failure) detail += "; first failure: " + format_game(report.first_failure->probe);
  return {"selective-identity", report.samples > 0 && report.passed == report.samples, detail};
}

CheckResult check_conjunctive_group(const VerifyConfig& config) {
  Tally t("conjunctive-group");
  for (std::size_t n = 0; n < config.group_games; ++n) {
    const GameId g = random_impartial(probe_params(config.seed + n));
    const GameId inv = conjunctive_inverse(g);
    const std::string text = format_game(g);
    t.expect(is_impartial(inv), "inverse of " + text + " is not impartial");
    const FinalScores pair = eval2(OperatorKind::Conjunctive, g, inv, config.semantics);
    t.expect(outcome(pair) == Outcome::Tie, text + " conj its inverse gave " + show(pair));
    for (std::size_t k = 0; k < config.group_probes; ++k) {
      const GameId probe = random_impartial(probe_params(config.seed + 1'000'000 + n * config.group_probes + k));
      const GameId parts[] = {g, inv, probe};
      const Outcome got = outcome(eval_sum(OperatorKind::Conjunctive, parts, config.semantics));
      t.expect(got == outcome(probe), "(" + text + " conj inverse) conj " + format_game(probe) + " gave " +
                                          std::string(to_string(got)));
    }
  }
  return t.result("instances");
}

CheckResult check_conjunctive_additivity(const VerifyConfig& config) {
  Tally t("conjunctive-additivity");
  for (const OctalRuleset& rules : default_battery()) {
    const RulesetId id = intern_ruleset(rules);
    GsSolver conj(OperatorKind::Conjunctive);
    GsSolver disj(OperatorKind::Disjunctive);
    std::vector<Score> single;
    for (std::uint32_t n = 0; n <= config.additivity_bound; ++n) {
      single.push_back(conj.value(Position::of(id, {n})));
      if (!rules.allows_split()) {
        t.expect(single.back() == disj.value(Position::of(id, {n})),
                 describe(rules) + " heap " + std::to_string(n) + " differs between operators");
      }
    }
    for (std::uint32_t n = 0; n <= config.additivity_bound; ++n) {
      for (std::uint32_t m = n; m <= config.additivity_bound; ++m) {
        const Score got = conj.value(Position::of(id, {n, m}));
        t.expect(got == single[n] + single[m], describe(rules) + " {" + std::to_string(n) + "," + std::to_string(m) +
                                                   "} = " + got.to_string());
      }
    }
  }
  return t.result("positions");
}

CheckResult check_selective_additivity(const VerifyConfig& config) {
  Tally t("selective-additivity");
  std::size_t tested = 0;
  for (const OctalRuleset& rules : default_battery()) {
    const RulesetId id = intern_ruleset(rules);
    GsSolver sel(OperatorKind::Selective);
    std::vector<Score> single;
    for (std::uint32_t n = 0; n <= config.selective_bound; ++n) single.push_back(sel.value(Position::of(id, {n})));
    if (std::any_of(single.begin(), single.end(), [](const Score& s) { return s < 0; })) {
      t.note(describe(rules) + " skipped (negative single-heap value)");
      continue;
    }
    ++tested;
    std::vector<std::uint32_t> sizes;
    auto rec = [&](auto& self, std::uint32_t from) -> void {
      if (!sizes.empty()) {
        std::vector<Heap> heaps;
        Score want = 0;
        for (std::uint32_t s : sizes) {
          heaps.push_back({id, s});
          want += single[s];
        }
        const Score got = sel.value(Position(heaps));
        t.expect(got == want, describe(rules) + " " + heaps_text(sizes) + " = " + got.to_string());
      }
      if (sizes.size() == config.selective_heaps) return;
      for (std::uint32_t s = from; s <= config.selective_bound; ++s) {
        sizes.push_back(s);
        self(self, s);
        sizes.pop_back();
      }
    };
    rec(rec, 1);
  }
  if (tested == 0) return {"selective-additivity", false, "no battery ruleset meets the nonnegativity hypothesis"};
  return t.result("positions");
}

CheckResult check_octal_tree_oracle(const VerifyConfig& config) {
  Tally t("octal-tree-oracle");
  for (const OctalRuleset& rules : default_battery()) {
    const RulesetId id = intern_ruleset(rules);
    for (OperatorKind op : kAllOperators) {
      const bool sequential = op == OperatorKind::Sequential;
      if (sequential && rules.allows_split()) continue;
      std::map<std::uint32_t, GameId> trees;
      auto tree = [&](std::uint32_t n) {
        auto it = trees.find(n);
        if (it == trees.end()) it = trees.emplace(n, gs_to_game(rules, n, op, config.oracle_beans)).first;
        return it->second;
      };
      GsSolver solver(op);
      auto visit = [&](const std::vector<std::uint32_t>& sizes) {
        std::vector<GameId> parts;
        std::vector<Heap> heaps;
        for (std::uint32_t s : sizes) {
          parts.push_back(tree(s));
          heaps.push_back({id, s});
        }
        const Score want = final_scores(sum(op, parts)).left_first;
        const Score got = sequential ? solver.value(SeqPosition(heaps)) : solver.value(Position(heaps));
        t.expect(got == want, describe(rules) + " " + std::string(to_string(op)) + " " + heaps_text(sizes) +
                                  ": G_s " + got.to_string() + " vs tree " + want.to_string());
      };
      if (sequential) {
        for_each_composition(config.oracle_beans, visit);
      } else {
        for_each_multiset(config.oracle_beans, visit);
      }
    }
  }
  return t.result("positions");
}

CheckResult check_outcome_partition(const VerifyConfig& config) {
  Tally t("outcome-partition");
  for (std::size_t n = 0; n < config.property_games; ++n) {
    const GameId g = random_game(probe_params(config.seed + n));
    const FinalScores fs = final_scores(g);
    const int l = fs.left_first.sign();
    const int r = fs.right_first.sign();
    const bool in[] = {
        (l > 0 && r >= 0) || (l == 0 && r > 0),  // L
        (l < 0 && r <= 0) || (l == 0 && r < 0),  // R
        l > 0 && r < 0,                      // N
        l < 0 && r > 0,                      // P
        l == 0 && r == 0,                    // Tie
    };
    const Outcome classes[] = {Outcome::Left, Outcome::Right, Outcome::Next, Outcome::Previous, Outcome::Tie};
    std::size_t hits = 0;
    bool agrees = false;
    for (std::size_t k = 0; k < 5; ++k) {
      if (!in[k]) continue;
      ++hits;
      agrees = outcome(g) == classes[k];
    }
    t.expect(hits == 1 && agrees, format_game(g) + " with final scores " + show(fs));
  }
  return t.result("games");
}

CheckResult check_negation_mirror(const VerifyConfig& config) {
  Tally t("negation-mirror");
  for (std::size_t n = 0; n < config.property_games; ++n) {
    const GameId g = random_game(probe_params(config.seed + n));
    const FinalScores fs = final_scores(g);
    const GameId neg = negate(g);
    expect_scores(t, "negate " + format_game(g), final_scores(neg), -fs.right_first, -fs.left_first);
    t.expect(outcome(neg) == mirror(outcome(g)), "outcome of negate " + format_game(g));
    t.expect(negate(neg) == g, "double negation of " + format_game(g));
  }
  return t.result("instances");
}

CheckResult check_shift_covariance(const VerifyConfig& config) {
  Tally t("shift-covariance");
  auto rng = stream(config, 4);
  for (std::size_t n = 0; n < config.property_games; ++n) {
    const GameId g = random_game(probe_params(config.seed + n));
    const Score c = small_rational(rng);
    const FinalScores fs = final_scores(g);
    expect_scores(t, "shift " + format_game(g) + " by " + c.to_string(), final_scores(shift(g, c)),
                  fs.left_first + c, fs.right_first + c);
  }
  return t.result("games");
}

CheckResult check_impartial_symmetry(const VerifyConfig& config) {
  Tally t("impartial-symmetry");
  for (std::size_t n = 0; n < config.property_games; ++n) {
    const GameId g = random_impartial(probe_params(config.seed + n));
    const FinalScores fs = final_scores(g);
    t.expect(is_impartial(g), "generated " + format_game(g) + " is not impartial");
    t.expect(fs.left_first + fs.right_first == root_score(g) * 2, format_game(g) + " has final scores " + show(fs));
  }
  return t.result("instances");
}

CheckResult check_notation_round_trip(const VerifyConfig& config) {
  Tally t("notation-round-trip");
  for (std::size_t n = 0; n < config.property_games; ++n) {
    ImpartialParams p = probe_params(config.seed + n);
    p.palette = {-2, Score(-1, 2), 0, Score(1, 3), 1, Score(7, 3)};
    const GameId g = random_game(p);
    const std::string text = format_game(g);
    bool ok = false;
    try {
      ok = parse_game(text) == g;
    } catch (const ParseError&) {
    }
    t.expect(ok, text);
  }
  return t.result("games");
}

CheckResult check_nonzero_witness(const VerifyConfig& config) {
  Tally t("nonzero-witness");
  std::uint64_t seed = config.seed;
  for (std::size_t n = 0; n < config.witness_games; ++n) {
    GameId g = number(0);
    while (g == number(0)) g = random_game(probe_params(seed++));
    for (OperatorKind op : {OperatorKind::Conjunctive, OperatorKind::Selective}) {
      const std::string label = std::string(to_string(op)) + " " + format_game(g);
      try {
        const ContextWitness w = nonzero_witness(g, op);
        const Outcome with_g = outcome(eval2(op, g, w.context, config.semantics));
        const Outcome with_zero = outcome(w.context);
        t.expect(with_g != with_zero && with_g == w.with_g && with_zero == w.with_h, label);
      } catch (const std::exception& e) {
        t.expect(false, label + ": " + e.what());
      }
    }
  }
  return t.result("witnesses");
}

CheckResult check_period_anchor(const VerifyConfig& config) {
  Tally t("period-anchor");
  const OctalRuleset rules = parse_octal("0.33:1,2");
  const GsTable table = gs_table(OperatorKind::Disjunctive, intern_ruleset(rules), config.period_n_max);
  t.expect(!table.truncated, "table truncated");
  const auto period = find_period(table.values, config.min_confirm);
  t.expect(period && period->preperiod == 0 && period->period == 4,
           period ? "found N=" + std::to_string(period->preperiod) + " p=" + std::to_string(period->period)
                  : "no period found");
  t.expect(rules.reference_period() == std::optional<std::size_t>{4}, "reference period 2k is not 4");
  const auto short_table = gs_table(OperatorKind::Disjunctive, intern_ruleset(rules), 40);
  t.expect(find_period(short_table.values, 8) == PeriodReport{0, 4, 37}, "n_max 40, min_confirm 8");
  return t.result("claims");
}

CheckResult check_battery_reports(const VerifyConfig& config) {
  Tally t("battery-reports");
  for (const OctalRuleset& rules : default_battery()) {
    const ConjectureReport report =
        conjecture_report(rules, {}, config.battery_n_max, config.min_confirm, config.battery_limits);
    t.expect(report.operators.size() == 4, describe(rules) + " report lacks operators");
    for (const OperatorPeriods& op : report.operators) {
      const std::string label = describe(rules) + " " + std::string(to_string(op.op));
      if (op.error) {
        t.expect(op.op == OperatorKind::Sequential && rules.allows_split(), label + ": " + *op.error);
        continue;
      }
      t.expect(op.values.size() >= 2, label + " produced no table");
      if (!op.period) continue;
      const auto again = find_period(op.values, config.min_confirm);
      t.expect(again == op.period, label + " period does not re-verify");
    }
  }
  return t.result("report entries");
}

std::vector<NamedCheck> paper_checks() {
  return {
      {"worked-examples", check_worked_examples},
      {"figure1-conjunctive", check_figure1_conjunctive},
      {"figure2-selective", check_figure2_selective},
      {"sequential-gadget", check_sequential_gadget},
      {"sequential-identity", check_sequential_identity},
      {"selective-identity", check_selective_identity},
      {"conjunctive-group", check_conjunctive_group},
      {"conjunctive-additivity", check_conjunctive_additivity},
      {"selective-additivity", check_selective_additivity},
      {"octal-tree-oracle", check_octal_tree_oracle},
      {"outcome-partition", check_outcome_partition},
      {"negation-mirror", check_negation_mirror},
      {"shift-covariance", check_shift_covariance},
      {"impartial-symmetry", check_impartial_symmetry},
      {"notation-round-trip", check_notation_round_trip},
      {"nonzero-witness", check_nonzero_witness},
      {"period-anchor", check_period_anchor},
      {"battery-reports", check_battery_reports},
  };
}

std::vector<CheckResult> verify_paper(const VerifyConfig& config) {
  std::vector<CheckResult> out;
  for (const NamedCheck& check : paper_checks()) {
    try {
      out.push_back(check.run(config));
    } catch (const std::exception& e) {
      out.push_back({check.name, false, std::string("exception: ") + e.what()});
    }
  }
  return out;
}

}  // namespace scoring
