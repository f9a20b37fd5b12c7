#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jring::cli {

// Entry point of the jring tool. args excludes the program name.
// Returns 0 on success, 1 when verify fails, 2 on argument errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jring::cli
