#include "fuzcon/report.hpp"

#include "fuzcon/errors.hpp"

namespace fuzcon {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::precondition_failed: return "precondition_failed";
  }
  return "fails";
}

double Witness::value(const std::string& key) const {
  for (const auto& [k, v] : values) {
    if (k == key) return v;
  }
  throw Error("witness has no value named '" + key + "'");
}

nlohmann::ordered_json to_json(const NumericConfig& cfg) {
  nlohmann::ordered_json j;
  j["grid_n"] = cfg.grid_n;
  j["grid2_n"] = cfg.grid2_n;
  j["ep_n"] = cfg.ep_n;
  j["bisect_iters"] = cfg.bisect_iters;
  j["eps_eq"] = cfg.eps_eq;
  j["eps_zero"] = cfg.eps_zero;
  j["eps_one"] = cfg.eps_one;
  j["delta_jump"] = cfg.delta_jump;
  j["tau_jump"] = cfg.tau_jump;
  return j;
}

nlohmann::ordered_json to_json(const CheckResult& r) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["law_id"] = r.law_id;
  j["verdict"] = to_string(r.verdict);
  j["operands"] = r.operands;
  if (r.witness) {
    nlohmann::ordered_json w;
    w["point"] = r.witness->point;
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.witness->values) values[k] = v;
    w["values"] = values;
    if (!r.witness->note.empty()) w["note"] = r.witness->note;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  j["details"] = details;
  j["config"] = to_json(r.config);
  return j;
}

}  // namespace fuzcon
