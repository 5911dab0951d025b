#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schubert::cli {

/// Runs one command. `args` excludes the program name.
/// Returns 0 on success, 1 for a negative domain result under --strict, 2 on errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubert::cli
