// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

namespace qwalk {

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_verify_failed = 1, exit_usage = 2, exit_horizon = 3 };

/// Entry point behind tools/qwalk. CSV goes to `out` unless --output is given; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwalk
