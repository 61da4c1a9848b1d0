#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scotree::cli {

// Runs one CLI invocation. Exit codes: 0 = success / checked property holds,
// 1 = checked property fails, 2 = parse or validation error (including
// malformed command lines).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scotree::cli
