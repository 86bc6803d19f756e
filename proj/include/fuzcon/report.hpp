#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fuzcon/config.hpp"

namespace fuzcon {

inline constexpr const char* kReportSchema = "fuzcon-report/1";

enum class Verdict { holds, fails, precondition_failed };

std::string to_string(Verdict v);

/// A concrete input tuple demonstrating a violation, with the values seen.
struct Witness {
  std::vector<double> point;
  std::vector<std::pair<std::string, double>> values;
  std::string note;

  double value(const std::string& key) const;
};

struct CheckResult {
  std::string law_id;
  Verdict verdict = Verdict::holds;
  std::optional<Witness> witness;
  std::vector<std::string> operands;
  std::map<std::string, std::string> details;
  NumericConfig config;

  bool holds() const { return verdict == Verdict::holds; }
  bool fails() const { return verdict == Verdict::fails; }
};

nlohmann::ordered_json to_json(const NumericConfig& cfg);
nlohmann::ordered_json to_json(const CheckResult& r);

}  // namespace fuzcon
