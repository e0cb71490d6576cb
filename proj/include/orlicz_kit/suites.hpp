#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orlicz_kit/report.hpp"

namespace orlicz {

struct SuiteOptions {
  std::uint64_t seed = 0;
  double tol = 1e-6;
};

struct SuiteInfo {
  std::string name;
  std::string module;
  std::string operations;
};

/// Declared order; `all` runs them in this order.
const std::vector<SuiteInfo>& suite_catalog();

/// Expands "all" and rejects unknown names (std::invalid_argument).
std::vector<std::string> expand_suites(const std::vector<std::string>& names);

/// Appends one record per check of the suite.
void run_suite(const std::string& name, const SuiteOptions& opt, Report& report);

}  // namespace orlicz
