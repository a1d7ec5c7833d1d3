#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace visicone {

/// Entry point of the batch CLI. Returns the process exit code:
/// 0 success, 1 malformed input, 2 numerical failure, 3 property-suite
/// failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace visicone
