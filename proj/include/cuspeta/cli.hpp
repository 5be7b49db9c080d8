#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuspeta::cli {

/// Runs the command line front end on the given arguments (without the
/// program name). Results go to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 invalid input, 2 verification failure.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cuspeta::cli
