#pragma once

#include <iosfwd>

namespace clift::cli {

// Full command-line driver, callable in-process for tests.  Returns the
// process exit code: 0 on success, 1 when a verification found violations,
// 2 on bad input or usage.  Respects the CLIFT_VERBOSE environment
// variable for report detail.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace clift::cli
