#pragma once

// Invariant suites run by `sidon verify`.

#include <cstdint>
#include <string>
#include <vector>

namespace sidon {

struct CheckResult {
  std::string suite;
  std::string check;
  bool passed = false;
  std::string detail;
};

/// Suite names accepted by run_suite, in execution order for "all".
const std::vector<std::string>& suite_names();

/// Runs one suite ("all" runs every suite). Throws Error for unknown names.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

}  // namespace sidon
