#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "scoring/evaluator.hpp"
#include "scoring/octal.hpp"
#include "scoring/verify.hpp"

namespace scoring {

using Json = nlohmann::json;  // std::map-backed, so keys serialize sorted

inline constexpr const char* kSchemaVersion = "1";

/// Integers as JSON numbers, everything else as a "num/den" string.
Json to_json(const Score& s);
Json to_json(const FinalScores& fs);
Json to_json(const PeriodReport& p);
Json to_json(const OperatorPeriods& op);
Json to_json(const ConjectureReport& report);
Json to_json(const CheckResult& check);

/// New report object carrying the schema version and command name.
Json report_header(const std::string& command);

/// "n,value" rows with a header line.
std::string table_csv(const std::vector<Score>& values);

}  // namespace scoring
