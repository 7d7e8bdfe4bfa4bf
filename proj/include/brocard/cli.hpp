#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace brocard::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInternal = 2;
inline constexpr int kExitCheckpoint = 3;

/// Runs one command line (argv[0] is the program name). Never throws.
int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace brocard::cli
