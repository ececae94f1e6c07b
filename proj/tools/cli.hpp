#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spolya::cli {

enum ExitCode : int {
    kSuccess = 0,
    kRefuted = 1,
    kUnknown = 2,
    kInputError = 3,
    kSimplexProductRequired = 4,
};

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spolya::cli
