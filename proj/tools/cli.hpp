#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spg::cli {

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on a domain error, 2 on a
/// usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spg::cli
