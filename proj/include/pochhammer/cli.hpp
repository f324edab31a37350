#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pochhammer::cli {

/// Runs one `pochh` invocation. `args` excludes the program name.
/// Returns 0 on success, 2 on invalid input, 1 on internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pochhammer::cli
