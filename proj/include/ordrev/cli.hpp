#ifndef ORDREV_CLI_HPP
#define ORDREV_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ordrev {

// Entry point shared by the binary and the tests.
//
//   ordrev decide FILE [--json] [--witness-depth N] [--exit-verdict]
//   ordrev oracle FILE --max-target N --max-coeff M [--json]
//   ordrev selftest
//
// Exit codes: 0 success; 2 parse/validation error; 1 internal invariant
// violation; with --exit-verdict, 0 reversible and 3 non-reversible.
int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace ordrev

#endif
