#pragma once

#include <iosfwd>

namespace homolink::cli {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;

// Parses argv and runs one subcommand. Reports go to `out` unless a path is
// given; errors are written to `err` as a JSON object.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace homolink::cli
