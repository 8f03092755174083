#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rootpoly::cli {

/// Runs one command line (without the program name). Returns 0 on success, 1 when
/// a verification check fails, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rootpoly::cli
