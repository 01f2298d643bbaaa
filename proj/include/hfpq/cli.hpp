#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hfpq {

/// Runs the command line `hfpq <args...>` (program name excluded).
/// Returns 0 on success, 1 when a code fails verification or a mathematical
/// precondition, 2 on malformed input or usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hfpq
