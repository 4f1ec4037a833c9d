#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vergne::cli {

/// Exit codes shared by every verb.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInvalidInput = 2,
    kIoError = 3,
};

/// Runs one command line (without the program name) and returns its exit
/// code. Verbs: betti, enumerate, tree, pair, reduce, verify.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vergne::cli
