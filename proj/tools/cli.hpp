#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orientcorr::cli {

inline constexpr const char *kSchemaVersion = "1";

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kInputError = 3,
  kOverCap = 4,
};

/// Runs the command line tool. Results go to `out`, diagnostics to `err`;
/// `in` backs `classify --stream -`.
int run(int argc, const char *const *argv, std::istream &in, std::ostream &out,
        std::ostream &err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err);

} // namespace orientcorr::cli
