#ifndef HURWITZ_TOOLS_CLI_HPP
#define HURWITZ_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hurwitz::cli {

// Runs the full command surface on the given arguments (program name
// excluded) and streams, so tests can drive the tool in process.  Returns
// the process exit code: 0 success, 1 runtime failure, 2 usage error,
// 3 search exhausted without a witness.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hurwitz::cli

#endif  // HURWITZ_TOOLS_CLI_HPP
