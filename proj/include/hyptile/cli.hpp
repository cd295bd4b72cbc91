#ifndef HYPTILE_CLI_HPP
#define HYPTILE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hyptile {

// Command-line front end.  `args` excludes the program name.
// Exit codes: 0 success / verification passed, 1 verification failure,
// 2 usage error, 3 enumeration cell cap exceeded.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hyptile

#endif
