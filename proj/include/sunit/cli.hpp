#pragma once

#include <iosfwd>

namespace sunit {

// Runs the command-line front end on argv and returns the process exit code:
// 0 when every check passed, 1 when a verification failed and 2 for usage or
// input errors. Each run writes one JSON manifest, normally to `out`; for the
// CSV and plain-text formats the manifest goes to `err` instead.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sunit
