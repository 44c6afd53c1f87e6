#pragma once

#include <iosfwd>

namespace mcloc {

// Command-line entry point, separated from main() so the test suite can
// drive it with argv vectors and capture the byte-exact output.
// Exit codes: 0 success, 1 verification failure, 2 usage error.
int cliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcloc
