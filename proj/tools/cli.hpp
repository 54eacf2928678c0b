#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace affweyl::cli {

/// Dispatches one command line (without the program name). Exit code 0 on success,
/// 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace affweyl::cli
