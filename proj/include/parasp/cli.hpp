#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parasp::cli {

/// Exit statuses: 0 a model was produced or the check passed, 1 no model or the check failed,
/// 2 usage or input error.
enum Exit : int { ok = 0, no_result = 1, input_error = 2 };

/// Runs one command line (without the program name) and writes reports to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parasp::cli
