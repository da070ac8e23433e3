#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpb::cli {

/// Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 bad
/// input or usage. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpb::cli
