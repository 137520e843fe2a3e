#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gagliardo {

struct VerifyOptions {
  std::uint64_t seed = 20250810;
  std::string only;          ///< filter by module tag or criterion id; empty = all
  double eta_perturb = 0.0;  ///< fault-injection fixture: perturb the calibrated eta
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string module_tag;
  bool passed = false;
  std::string detail;
};

struct VerifyOutcome {
  std::vector<CriterionResult> results;
  std::string report_json;
  bool all_passed = false;
};

/// Run the acceptance criteria (all, or the subset matching options.only).
VerifyOutcome run_verify(const VerifyOptions& options);

}  // namespace gagliardo
