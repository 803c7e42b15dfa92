#ifndef COMMGROUP_SELFTEST_HPP
#define COMMGROUP_SELFTEST_HPP

// Seeded invariant suites behind `commgroup selftest`.

#include <cstdint>
#include <string>
#include <vector>

#include "commgroup/word.hpp"

namespace commgroup {

struct SelftestConfig {
  std::uint64_t seed = 1;
  int cases = 100;
  Exponent box = 2;
};

struct SuiteResult {
  std::string name;
  int passed = 0;
  int total = 0;
  /// First few failures, one line each.
  std::vector<std::string> failures;

  bool ok() const { return passed == total; }
};

std::vector<SuiteResult> run_selftest(const SelftestConfig& config);

/// Fixed-width table, one row per suite, plus a summary line.
std::string format_selftest(const std::vector<SuiteResult>& results);

}  // namespace commgroup

#endif
