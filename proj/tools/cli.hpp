#ifndef GAR_TOOLS_CLI_HPP
#define GAR_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gar::cli {

enum ExitCode : int { Ok = 0, ValidationError = 1, InternalError = 2 };

/// Subcommands: mine, generalize, query, report, synth, serve.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Convenience for tests; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gar::cli

#endif
