#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kplane::cli {

/// Runs one command-line invocation. Exit status: 0 when the command
/// succeeded and any checked property holds, 1 when a checked property fails,
/// 2 on unusable input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kplane::cli
