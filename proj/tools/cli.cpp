#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "scoring/evaluator.hpp"
#include "scoring/notation.hpp"
#include "scoring/octal.hpp"
#include "scoring/operators.hpp"
#include "scoring/report.hpp"
#include "scoring/verify.hpp"

namespace scoring::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<GameId> input_games(const RunConfig& config) {
  std::vector<GameId> games;
  for (const std::string& text : config.games) games.push_back(parse_game(text));
  if (config.file) {
    for (GameId g : parse_game_lines(read_file(*config.file))) games.push_back(g);
  }
  if (games.empty()) throw UsageError("no games given");
  return games;
}

OperatorKind require_operator(const std::string& name) {
  auto op = parse_operator(name);
  if (!op) throw UsageError("unknown operator '" + name + "' (disj, conj, sel, seq)");
  return *op;
}

std::vector<std::uint32_t> parse_tail(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" ") == std::string::npos) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.front() == '-') throw UsageError("bad tail heap size '" + item + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

std::string score_line(const FinalScores& fs) {
  return "SL=" + fs.left_first.to_string() + " SR=" + fs.right_first.to_string() +
         " outcome=" + std::string(to_string(outcome(fs)));
}

std::string period_text(const std::optional<PeriodReport>& p) {
  if (!p) return "none";
  return "N=" + std::to_string(p->preperiod) + " p=" + std::to_string(p->period) + " (" +
         std::to_string(p->confirmations) + " confirmations)";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void check_format(const RunConfig& config, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (config.format == f) return;
  }
  throw UsageError("format '" + config.format + "' not supported by " + config.subcommand);
}

std::string cmd_eval(const RunConfig& config) {
  check_format(config, {"text", "json"});
  const std::vector<GameId> games = input_games(config);
  if (config.format == "json") {
    Json report = report_header("eval");
    Json rows = Json::array();
    for (GameId g : games) {
      Json row = to_json(final_scores(g));
      row["game"] = format_game(g);
      rows.push_back(row);
    }
    report["games"] = rows;
    return dump(report);
  }
  std::string out;
  for (GameId g : games) out += score_line(final_scores(g)) + "\n";
  return out;
}

std::string cmd_sum(const RunConfig& config) {
  check_format(config, {"text", "json"});
  const OperatorKind op = require_operator(config.op);
  const std::vector<GameId> games = input_games(config);
  const FinalScores fs = eval_sum(op, games);
  if (config.format == "json") {
    Json report = report_header("sum");
    report["op"] = to_string(op);
    Json parts = Json::array();
    for (GameId g : games) parts.push_back(format_game(g));
    report["components"] = parts;
    report.update(to_json(fs));
    return dump(report);
  }
  return score_line(fs) + "\n";
}

std::string cmd_gs(const RunConfig& config) {
  check_format(config, {"text", "json", "csv"});
  if (config.rules.size() != 1) throw UsageError("gs needs exactly one --rules");
  if (config.n_max < 1) throw UsageError("--n-max must be at least 1");
  const OperatorKind op = require_operator(config.op);
  const OctalRuleset rules = parse_octal(config.rules.front());
  if (op == OperatorKind::Sequential && rules.allows_split()) {
    throw UsageError("splitting rulesets are not defined under the sequential join");
  }
  const RulesetId id = intern_ruleset(rules);
  const std::vector<std::uint32_t> tail_sizes = parse_tail(config.tail);
  std::vector<Heap> tail;
  for (std::uint32_t s : tail_sizes) tail.push_back({id, s});
  const GsTable table = gs_table(op, id, config.n_max, tail);
  const auto period = find_period(table.values, config.min_confirm);

  if (config.format == "csv") return table_csv(table.values);
  if (config.format == "json") {
    Json report = report_header("gs");
    report["rules"] = format_octal(rules);
    report["op"] = to_string(op);
    report["n_max"] = config.n_max;
    report["min_confirm"] = config.min_confirm;
    report["tail"] = tail_sizes;
    report["truncated"] = table.truncated;
    Json values = Json::array();
    for (const Score& v : table.values) values.push_back(to_json(v));
    report["values"] = values;
    report["period"] = period ? to_json(*period) : Json(nullptr);
    return dump(report);
  }
  std::string out = "rules " + format_octal(rules) + " op " + std::string(to_string(op)) + "\n";
  for (std::size_t n = 0; n < table.values.size(); ++n) {
    out += std::to_string(n) + "\t" + table.values[n].to_string() + "\n";
  }
  if (table.truncated) {
    out += "truncated after n=" + std::to_string(table.values.size() - 1) + " (solver limits)\n";
  }
  out += "period " + period_text(period) + "\n";
  return out;
}

std::string cmd_period_compare(const RunConfig& config) {
  check_format(config, {"text", "json"});
  std::vector<OctalRuleset> battery;
  if (config.default_battery) battery = default_battery();
  for (const std::string& text : config.rules) battery.push_back(parse_octal(text));
  if (battery.empty()) throw UsageError("period-compare needs at least one ruleset");
  const std::vector<std::uint32_t> tail = parse_tail(config.tail);

  std::vector<ConjectureReport> reports;
  for (const OctalRuleset& rules : battery) {
    reports.push_back(conjecture_report(rules, tail, config.n_max, config.min_confirm));
  }
  if (config.format == "json") {
    Json report = report_header("period-compare");
    report["n_max"] = config.n_max;
    report["min_confirm"] = config.min_confirm;
    report["tail"] = tail;
    Json rows = Json::array();
    for (const ConjectureReport& r : reports) rows.push_back(to_json(r));
    report["reports"] = rows;
    return dump(report);
  }
  std::string out;
  for (const ConjectureReport& r : reports) {
    out += format_octal(r.rules) + "  reference 2k=" +
           (r.reference_period ? std::to_string(*r.reference_period) : std::string("undefined")) +
           "  all_periods_equal=" + (r.all_periods_equal ? "true" : "false") + "\n";
    for (const OperatorPeriods& op : r.operators) {
      out += "  " + std::string(to_string(op.op)) + ": ";
      if (op.error) {
        out += "n/a (" + *op.error + ")\n";
        continue;
      }
      out += "n<=" + std::to_string(op.values.size() - 1) + (op.truncated ? " (truncated)" : "") + "  period " +
             period_text(op.period) + "\n";
    }
  }
  return out;
}

std::string cmd_verify_paper(const RunConfig& config, bool& all_passed) {
  check_format(config, {"text", "json"});
  VerifyConfig vc = config.quick ? VerifyConfig::quick() : VerifyConfig{};
  vc.seed = config.seed;
  if (config.conjunctive_literal) vc.semantics.conjunctive = ConjunctiveRule::Literal;
  const std::vector<CheckResult> results = verify_paper(vc);
  std::size_t passed = 0;
  for (const CheckResult& r : results) passed += r.passed ? 1 : 0;
  all_passed = passed == results.size();

  if (config.format == "json") {
    Json report = report_header("verify-paper");
    report["seed"] = config.seed;
    report["quick"] = config.quick;
    report["passed"] = all_passed;
    Json checks = Json::array();
    for (const CheckResult& r : results) checks.push_back(to_json(r));
    report["checks"] = checks;
    return dump(report);
  }
  std::string out;
  for (const CheckResult& r : results) out += (r.passed ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
  out += std::to_string(passed) + "/" + std::to_string(results.size()) + " checks passed\n";
  return out;
}

void add_format(CLI::App* cmd, RunConfig& config, const std::string& help) {
  cmd->add_option("--format", config.format, help);
  cmd->add_option("-o,--output", config.output, "Write the report to this file");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Scoring-play combinatorial game engine", "scoring"};
  app.require_subcommand(1);

  CLI::App* eval = app.add_subcommand("eval", "Final scores and outcome of games");
  eval->add_option("games", config.games, "Games in brace notation");
  eval->add_option("--file", config.file, "File with one game per line");
  add_format(eval, config, "text or json");

  CLI::App* sum_cmd = app.add_subcommand("sum", "Final scores of a composite game");
  sum_cmd->add_option("--op", config.op, "disj, conj, sel or seq")->required();
  sum_cmd->add_option("games", config.games, "Components in order");
  sum_cmd->add_option("--file", config.file, "File with one component per line");
  add_format(sum_cmd, config, "text or json");

  CLI::App* gs_cmd = app.add_subcommand("gs", "Scoring Sprague-Grundy table of an octal ruleset");
  gs_cmd->add_option("--rules", config.rules, "Ruleset such as 0.33:1,2")->required();
  gs_cmd->add_option("--op", config.op, "disj, conj, sel or seq")->required();
  gs_cmd->add_option("--n-max", config.n_max, "Largest heap size");
  gs_cmd->add_option("--tail", config.tail, "Fixed extra heaps, comma separated");
  gs_cmd->add_option("--min-confirm", config.min_confirm, "Indices a period must cover");
  add_format(gs_cmd, config, "text, csv or json");

  CLI::App* compare = app.add_subcommand("period-compare", "Periods under all four operators");
  compare->add_option("--rules,rules", config.rules, "Rulesets to compare");
  compare->add_flag("--default-battery", config.default_battery, "Add the built-in ruleset battery");
  compare->add_option("--n-max", config.n_max, "Largest heap size");
  compare->add_option("--tail", config.tail, "Fixed extra heaps, comma separated");
  compare->add_option("--min-confirm", config.min_confirm, "Indices a period must cover");
  add_format(compare, config, "text or json");

  CLI::App* verify = app.add_subcommand("verify-paper", "Replay worked examples and theorem instances");
  verify->add_option("--seed", config.seed, "Base seed");
  verify->add_flag("--quick", config.quick, "Reduced sample counts and bounds");
  verify->add_flag_callback("--json", [&config] { config.format = "json"; }, "Same as --format json");
  verify->add_flag("--conjunctive-literal", config.conjunctive_literal)->group("");
  add_format(verify, config, "text or json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.subcommand = app.get_subcommands().front()->get_name();

  try {
    std::string text;
    int code = kExitOk;
    if (config.subcommand == "eval") {
      text = cmd_eval(config);
    } else if (config.subcommand == "sum") {
      text = cmd_sum(config);
    } else if (config.subcommand == "gs") {
      text = cmd_gs(config);
    } else if (config.subcommand == "period-compare") {
      text = cmd_period_compare(config);
    } else {
      bool all_passed = false;
      text = cmd_verify_paper(config, all_passed);
      if (!all_passed) code = kExitCheckFailed;
    }
    if (config.output) {
      std::ofstream file(*config.output, std::ios::binary);
      if (!file) throw UsageError("cannot write " + *config.output);
      file << text;
    } else {
      out << text;
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace scoring::cli
