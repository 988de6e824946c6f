#pragma once

#include <ostream>

namespace necgraph {

// Full command line driver; returns the process exit code. Streams are
// injected so tests can capture output. Exit codes: 0 success (a checked
// property holds), 1 checked property fails, 2 invalid parameters, 3
// malformed input file.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace necgraph
