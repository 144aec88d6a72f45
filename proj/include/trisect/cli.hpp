#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trisect::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 2;
inline constexpr int kExitInvalid = 3;

/// Runs `trisect <args...>`. JSON payload goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace trisect::cli
