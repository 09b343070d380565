#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpe {

/// Runs the command line tool. args excludes the program name. Exit codes:
/// 0 success or property holds, 1 property fails, 2 usage error, 3 input
/// format or internal error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace gpe
