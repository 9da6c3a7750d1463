#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclezeta::cli {

enum ExitCode { kOk = 0, kUsage = 1, kDomain = 2, kSizeCap = 3, kInternal = 4 };

// Runs one command line (without the program name). Results go to `out` as a
// single JSON document (or JSON lines / TSV where requested), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclezeta::cli
