#ifndef HOMMEL_CLI_HPP
#define HOMMEL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hommel {

/// Entry point shared by the hommel binary and the tests. args excludes
/// the program name. Returns the process exit status: 0 on success, 2 on
/// usage or data errors.
int run_cli(std::vector<std::string> args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace hommel

#endif  // HOMMEL_CLI_HPP
