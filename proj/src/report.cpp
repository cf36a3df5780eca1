#include "scoring/report.hpp"

#include "scoring/notation.hpp"

namespace scoring {

Json to_json(const Score& s) {
  if (s.is_integer()) return s.numerator();
  return s.to_string();
}

Json to_json(const FinalScores& fs) {
  return {{"sl", to_json(fs.left_first)}, {"sr", to_json(fs.right_first)}, {"outcome", to_string(outcome(fs))}};
}

Json to_json(const PeriodReport& p) {
  return {{"preperiod", p.preperiod}, {"period", p.period}, {"confirmations", p.confirmations}};
}

namespace {

Json values_json(const std::vector<Score>& values) {
  Json out = Json::array();
  for (const Score& v : values) out.push_back(to_json(v));
  return out;
}

}  // namespace

Json to_json(const OperatorPeriods& op) {
  Json out{{"op", to_string(op.op)}, {"truncated", op.truncated}, {"values", values_json(op.values)}};
  out["period"] = op.period ? to_json(*op.period) : Json(nullptr);
  out["error"] = op.error ? Json(*op.error) : Json(nullptr);
  return out;
}

Json to_json(const ConjectureReport& report) {
  Json ops = Json::array();
  for (const OperatorPeriods& op : report.operators) ops.push_back(to_json(op));
  return {
      {"rules", format_octal(report.rules)},
      {"tail", report.tail},
      {"n_max", report.n_max},
      {"min_confirm", report.min_confirm},
      {"reference_period", report.reference_period ? Json(*report.reference_period) : Json(nullptr)},
      {"all_periods_equal", report.all_periods_equal},
      {"operators", ops},
  };
}

Json to_json(const CheckResult& check) {
  return {{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}};
}

Json report_header(const std::string& command) {
  return {{"schema_version", kSchemaVersion}, {"command", command}};
}

std::string table_csv(const std::vector<Score>& values) {
  std::string out = "n,value\n";
  for (std::size_t n = 0; n < values.size(); ++n) out += std::to_string(n) + "," + values[n].to_string() + "\n";
  return out;
}

}  // namespace scoring
