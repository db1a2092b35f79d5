// Command-line front end. run_cli is the whole program behind a testable
// interface; the binary's main() only forwards to it.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict (not
// provable, invalid, check failed, diff or counterexamples found), 2
// usage or input error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logicfuse {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logicfuse
