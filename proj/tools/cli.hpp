#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace diffgraph::cli {

/// Exit statuses: success or identifiable, tool failure, sound negative.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotIdentifiable = 2;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diffgraph::cli
