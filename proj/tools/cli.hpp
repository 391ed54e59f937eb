#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace numerals::cli {

/// Stable exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,  // bad flags, ParseError, RangeError
    kAmbiguous = 3,
    kEvaluation = 4,  // DivisionByZero, UndefinedBySource, DomainError, InexactQuotient
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numerals::cli
