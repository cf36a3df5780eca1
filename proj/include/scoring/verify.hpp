#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "scoring/octal.hpp"
#include "scoring/operators.hpp"

namespace scoring {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Sample counts and bounds for the regression checks. The defaults are the
/// full-size runs; tests shrink them.
struct VerifyConfig {
  std::uint64_t seed = 0;
  Semantics semantics;

  std::size_t figure_assignments = 100;
  std::size_t sequential_games = 500;
  std::size_t sequential_depth = 5;
  std::size_t group_games = 200;
  std::size_t group_probes = 50;
  std::uint32_t additivity_bound = 30;
  std::uint32_t selective_bound = 20;
  std::size_t selective_heaps = 3;
  std::uint32_t oracle_beans = 12;
  std::size_t property_games = 1000;
  std::size_t witness_games = 200;
  std::uint32_t period_n_max = 200;
  std::size_t min_confirm = 10;
  std::uint32_t battery_n_max = 200;
  /// Per-table limits for the battery reports; splitting rulesets truncate.
  GsLimits battery_limits{4'000'000, 2'000'000};

  /// Reduced counts and bounds for smoke runs.
  static VerifyConfig quick();
};

/// Rulesets used by the additivity, oracle and period checks.
std::vector<OctalRuleset> default_battery();

/// Random rational in {n/d : -9 <= n <= 9, 1 <= d <= 3}.
Score small_rational(std::mt19937_64& rng);

struct NamedCheck {
  std::string name;
  std::function<CheckResult(const VerifyConfig&)> run;
};

/// Every regression check, in reporting order.
std::vector<NamedCheck> paper_checks();

// Individual checks, one per worked example group or theorem family.
CheckResult check_worked_examples(const VerifyConfig& config);
CheckResult check_figure1_conjunctive(const VerifyConfig& config);
CheckResult check_figure2_selective(const VerifyConfig& config);
CheckResult check_sequential_gadget(const VerifyConfig& config);
CheckResult check_sequential_identity(const VerifyConfig& config);
CheckResult check_selective_identity(const VerifyConfig& config);
CheckResult check_conjunctive_group(const VerifyConfig& config);
CheckResult check_conjunctive_additivity(const VerifyConfig& config);
CheckResult check_selective_additivity(const VerifyConfig& config);
CheckResult check_octal_tree_oracle(const VerifyConfig& config);
CheckResult check_outcome_partition(const VerifyConfig& config);
CheckResult check_negation_mirror(const VerifyConfig& config);
CheckResult check_shift_covariance(const VerifyConfig& config);
CheckResult check_impartial_symmetry(const VerifyConfig& config);
CheckResult check_notation_round_trip(const VerifyConfig& config);
CheckResult check_nonzero_witness(const VerifyConfig& config);
CheckResult check_period_anchor(const VerifyConfig& config);
CheckResult check_battery_reports(const VerifyConfig& config);

std::vector<CheckResult> verify_paper(const VerifyConfig& config);

}  // namespace scoring
