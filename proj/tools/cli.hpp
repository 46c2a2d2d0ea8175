#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matstar::cli {

enum ExitCode : int { kOk = 0, kAxiomFailure = 1, kBadInput = 2, kAnomaly = 3 };

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matstar::cli
