#pragma once

#include <ostream>

namespace exb::cli {

// Full command-line entry point, stream-injected so tests can run it
// in-process. Exit codes: 0 success, 2 usage or argument range error,
// 3 input file parse error, 4 bound inapplicable to the request.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace exb::cli
