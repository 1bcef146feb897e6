#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planeperm {

// Parses args (program name excluded), runs the command, and writes results
// to out and diagnostics to err. Returns 0 on success (verification
// verdicts are data, not exit codes), 1 on domain errors (bad sequences,
// cap overruns), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planeperm
