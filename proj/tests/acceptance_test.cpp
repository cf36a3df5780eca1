// Runs each acceptance criterion at full size against its time limit and
// prints one PASS/FAIL line per criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "scoring/notation.hpp"
#include "scoring/structure_lab.hpp"
#include "scoring/verify.hpp"

using namespace scoring;

namespace {

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<std::vector<CheckResult>(const VerifyConfig&)> run;
};

std::function<std::vector<CheckResult>(const VerifyConfig&)> checks(
    std::vector<CheckResult (*)(const VerifyConfig&)> fns) {
  return [fns](const VerifyConfig& c) {
    std::vector<CheckResult> out;
    for (auto* f : fns) out.push_back(f(c));
    return out;
  };
}

// Criterion 4 exactly as worded: the candidate inverse is reverse(g).
CheckResult reversal_group(const VerifyConfig& config) {
  CheckResult r{"reversal-inverse", true, ""};
  std::size_t failures = 0;
  std::string first;
  for (std::size_t n = 0; n < config.group_games; ++n) {
    ImpartialParams p;
    p.seed = config.seed + n;
    const GameId g = random_impartial(p);
    const GameId inv = reverse(g);
    const GameId pair[] = {g, inv};
    bool ok = outcome(eval_sum(OperatorKind::Conjunctive, pair)) == Outcome::Tie;
    for (std::size_t k = 0; ok && k < config.group_probes; ++k) {
      ImpartialParams q;
      q.seed = config.seed + 1'000'000 + n * config.group_probes + k;
      const GameId probe = random_impartial(q);
      const GameId parts[] = {g, inv, probe};
      ok = outcome(eval_sum(OperatorKind::Conjunctive, parts)) == outcome(probe);
    }
    if (!ok) {
      ++failures;
      if (first.empty()) {
        const FinalScores fs = eval_sum(OperatorKind::Conjunctive, pair);
        first = format_game(g) + " conj its reversal gave (" + fs.left_first.to_string() + ", " +
                fs.right_first.to_string() + ")";
      }
    }
  }
  r.passed = failures == 0;
  r.detail = std::to_string(config.group_games - failures) + "/" + std::to_string(config.group_games) + " games";
  if (!first.empty()) r.detail += "; first failure " + first;
  return r;
}

}  // namespace

int main() {
  const VerifyConfig config;
  const std::vector<Criterion> criteria = {
      {1, "figure-1 conjunctive identities", 5, checks({check_figure1_conjunctive})},
      {2, "figure-2 selective identities", 5, checks({check_figure2_selective})},
      {3, "sequential identity", 30, checks({check_sequential_identity})},
      {4, "conjunctive group via reverse(g)", 60, [](const VerifyConfig& c) {
         return std::vector<CheckResult>{reversal_group(c)};
       }},
      {5, "conjunctive G_s additivity", 60, checks({check_conjunctive_additivity})},
      {6, "selective G_s additivity", 60, checks({check_selective_additivity})},
      {7, "octal tree oracle", 120, checks({check_octal_tree_oracle})},
      {8, "periodicity evidence", 120, checks({check_period_anchor, check_battery_reports})},
      {9, "property suites", 60,
       checks({check_outcome_partition, check_negation_mirror, check_shift_covariance, check_impartial_symmetry,
               check_notation_round_trip})},
      {10, "nonzero witness", 60, checks({check_nonzero_witness})},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    try {
      results = c.run(config);
    } catch (const std::exception& e) {
      results.push_back({"exception", false, e.what()});
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = secs < c.limit_seconds;
    for (const CheckResult& r : results) ok = ok && r.passed;
    failed += ok ? 0 : 1;
    std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), secs,
                c.limit_seconds);
    for (const CheckResult& r : results) {
      std::printf("    %s %s: %s\n", r.passed ? "ok  " : "fail", r.name.c_str(), r.detail.c_str());
    }
    if (c.number == 4) {
      const CheckResult alt = check_conjunctive_group(config);
      std::printf("    note: with conjunctive_inverse(g) in place of reverse(g): %s (%s)\n",
                  alt.passed ? "passes" : "fails", alt.detail.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
