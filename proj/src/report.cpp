#include "vpg/report.hpp"

#include <json.hpp>
#include <map>

namespace vpg {

using ordered_json = nlohmann::ordered_json;

std::string RunReport::to_json() const {
  ordered_json j;
  j["instance_digest"] = instance_digest;
  j["n"] = n;
  j["command"] = command;
  ordered_json stages_json = ordered_json::array();
  for (const auto& s : stages) {
    ordered_json sj;
    sj["name"] = s.name;
    sj["input_n"] = s.input_n;
    sj["parts"] = s.parts;
    sj["bound_formula"] = s.bound_formula;
    sj["bound_ok"] = s.bound_ok;
    sj["millis"] = s.millis;
    stages_json.push_back(sj);
  }
  j["stages"] = stages_json;
  j["certificates_ok"] = certificates_ok;
  j["verification_failures"] = verification_failures;
  if (!problem.empty()) {
    j["problem"] = problem;
    j["value"] = value;
    j["parts_used"] = parts_used;
    if (!oracle_value.empty()) {
      j["oracle_value"] = oracle_value;
      j["ratio_note"] = ratio_note;
    }
  }
  return j.dump(2) + "\n";
}

std::string aggregate_reports(const std::vector<std::string>& report_texts) {
  ordered_json out;
  out["runs"] = report_texts.size();
  std::size_t cert_fail = 0;
  std::map<std::string, std::size_t> by_problem;
  std::map<std::string, std::size_t> bound_violations;
  std::size_t oracle_runs = 0;
  for (const auto& text : report_texts) {
    ordered_json j = ordered_json::parse(text);
    if (j.contains("certificates_ok") && !j["certificates_ok"].get<bool>())
      ++cert_fail;
    if (j.contains("problem")) ++by_problem[j["problem"].get<std::string>()];
    if (j.contains("oracle_value")) ++oracle_runs;
    if (j.contains("stages"))
      for (const auto& s : j["stages"])
        if (s.contains("bound_ok") && !s["bound_ok"].get<bool>())
          ++bound_violations[s["name"].get<std::string>()];
  }
  out["certificate_failures"] = cert_fail;
  ordered_json probs;
  for (const auto& [k, v] : by_problem) probs[k] = v;
  out["problems"] = probs;
  ordered_json bounds;
  for (const auto& [k, v] : bound_violations) bounds[k] = v;
  out["bound_violations"] = bounds;
  out["oracle_runs"] = oracle_runs;
  return out.dump(2) + "\n";
}

}  // namespace vpg
