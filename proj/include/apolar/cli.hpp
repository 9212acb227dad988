#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace apolar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitEnvelope = 3;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apolar::cli
