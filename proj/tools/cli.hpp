#ifndef MFDECOMP_TOOLS_CLI_HPP
#define MFDECOMP_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mfd::cli {

enum ExitStatus : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsage = 2,
    kDataUnavailable = 3,
};

/// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mfd::cli

#endif
