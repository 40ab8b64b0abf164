#pragma once

// Command-line front end. Kept in a library so tests can drive it in-process.

#include <iosfwd>

namespace teapot::cli {

// Exit codes: 0 success, 1 computation error (or a failed check), 2 bad flags.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace teapot::cli
