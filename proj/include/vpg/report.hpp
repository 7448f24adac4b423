#pragma once

#include <string>
#include <vector>

#include "vpg/certificates.hpp"

namespace vpg {

struct StageStat {
  std::string name;
  std::size_t input_n = 0;
  std::size_t parts = 0;
  std::string bound_formula;
  bool bound_ok = true;
  double millis = 0.0;
};

/// Per-run report: digest, stage statistics, verification and solution
/// outcomes. Key order in the JSON output is fixed; timing values are the
/// only nondeterministic fields.
struct RunReport {
  std::string instance_digest;
  std::size_t n = 0;
  std::string command;
  std::vector<StageStat> stages;
  bool certificates_ok = true;
  std::vector<std::string> verification_failures;
  std::string problem;
  std::string value;
  std::string oracle_value;  // empty when the oracle did not run
  std::string ratio_note;
  std::size_t parts_used = 0;

  std::string to_json() const;
};

/// Aggregates run reports (JSON files) from a directory into one summary.
std::string aggregate_reports(const std::vector<std::string>& report_texts);

}  // namespace vpg
