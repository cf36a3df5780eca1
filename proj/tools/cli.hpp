#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace scoring::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Options shared by every subcommand, filled from the command line.
struct RunConfig {
  std::string subcommand;
  std::string op;
  std::vector<std::string> games;
  std::optional<std::string> file;
  std::vector<std::string> rules;
  bool default_battery = false;
  std::uint32_t n_max = 200;
  std::size_t min_confirm = 10;
  std::string tail;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::optional<std::string> output;
  bool quick = false;
  bool conjunctive_literal = false;
};

/// Runs one command line (without the program name) and returns the exit
/// code: 0 success, 1 failed check, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scoring::cli
