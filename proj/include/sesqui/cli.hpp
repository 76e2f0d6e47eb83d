#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sesqui {

// Command-line front end. args excludes the program name. Exit codes:
//   0 success / verdict computed
//   1 verification mismatch found
//   2 usage error
//   3 input parse error
//   4 resource or size bound exceeded
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace sesqui
