#pragma once

// The quintic command-line tool, callable in-process for tests.
//
//   quintic solve  --m .. --n .. --p .. --q .. --r .. [--digits N] [--json] ...
//   quintic verify REPORT.json
//   quintic bench  [--count N] [--digits D ...] [--seed S]
//
// Exit codes: 0 success, 1 usage or parse error, 2 solver or check failure.

#include <iosfwd>

namespace quintic::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quintic::cli
