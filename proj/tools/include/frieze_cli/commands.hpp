#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frieze::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

// Runs one command line (args exclude the program name). Input documents are
// read from the named file or from `in` when the input is "-" or omitted.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace frieze::cli
