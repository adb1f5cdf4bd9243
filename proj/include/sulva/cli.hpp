#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sulva {

/// Runs one CLI invocation. Exit codes: 0 success, 1 usage error,
/// 2 construction/script error. `default_precision` normally comes from
/// the SULVA_PRECISION environment variable, read once at startup.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            int default_precision = 50);

} // namespace sulva
