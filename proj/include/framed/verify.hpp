#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace framed {

struct CriterionResult {
  int id = 0;
  std::string suite;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Names accepted by `run_suite`, in criterion order.
const std::vector<std::string>& suite_names();

/// Runs one acceptance suite. Throws Error(Format) for an unknown name.
CriterionResult run_suite(std::string_view name);
std::vector<CriterionResult> run_all_suites();

/// "[PASS] 3 gauss-formula (1.23 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace framed
