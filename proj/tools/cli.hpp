#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hmr::cli {

/// Runs the hmr command line. `args` excludes the program name.
/// Exit codes: 0 success/valid, 1 domain error or invalid certificate or
/// failed construction, 2 usage or file/format error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hmr::cli
