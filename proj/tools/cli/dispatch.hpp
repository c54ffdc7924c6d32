#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace autoplex::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace autoplex::cli
