#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinnet::cli {

enum ExitCode : int { kOk = 0, kIdentityViolation = 1, kUsage = 2 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience for tests: argv[0] is supplied.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinnet::cli
