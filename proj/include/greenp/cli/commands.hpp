#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace greenp::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kVerifyFailed = 3,
  kResource = 4,
};

// census and ar-quiver enumerate O(p^2) objects.
constexpr int kMaxEnumerationPrime = 1000;

// Runs the command line; never throws. env_seed is the value of GREENP_SEED
// if set.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_seed);

}  // namespace greenp::cli
