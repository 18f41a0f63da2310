#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fvect {

// Run one CLI invocation (args excludes the program name). Returns the
// process exit code: 0 success or true verdict, 1 false verdict,
// 2 validation error, 3 size gate exceeded.
int cli_run(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace fvect
