#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphhash {

// Runs one subcommand (hash, compare, refine, gen, bench). args excludes the
// program name. Returns the process exit code: 0 success (or isomorphic for
// compare), 1 non-isomorphic, 2 any error, with a one-line message on err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphhash
