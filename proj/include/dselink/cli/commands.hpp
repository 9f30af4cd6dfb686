#ifndef DSELINK_CLI_COMMANDS_HPP
#define DSELINK_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dselink::cli {

/// Entry point of the `dse-link` tool. `args` excludes the program name.
/// Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dselink::cli

#endif  // DSELINK_CLI_COMMANDS_HPP
