#pragma once

// Seeded property suites behind `fpa verify --suite <name>`.

#include <cstdint>
#include <string>
#include <vector>

namespace fpa {

struct SuiteReport {
  std::string name;
  int passed = 0;
  int total = 0;
  std::vector<std::string> failures;  // first few, for diagnostics

  bool ok() const { return passed == total; }
  /// "<name>: <passed>/<total> passed"
  std::string summary() const;
};

const std::vector<std::string>& suite_names();
int default_count(const std::string& name);

/// Throws UsageError for an unknown suite. Same (name, seed, count) gives the
/// same report.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, int count);

}  // namespace fpa
