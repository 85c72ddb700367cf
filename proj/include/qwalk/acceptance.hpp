// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qwalk::acceptance {

struct Options {
  /// Horizons capped at 50 and quadrature at 1024 points.
  bool quick = false;
  /// Name of a check whose reference value is deliberately corrupted (negative control).
  std::string tamper;
  /// Restrict to these check names; empty runs everything.
  std::vector<std::string> only;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string measured;
  std::string threshold;
  std::string note;
  double seconds = 0;
};

/// Check names in execution order.
const std::vector<std::string>& check_names();

std::vector<CheckResult> run(const Options& options);

/// One line per check: "[PASS] 3 diffusive-limit  measured ... | threshold ... (0.12 s)".
void print_report(std::ostream& out, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qwalk::acceptance
