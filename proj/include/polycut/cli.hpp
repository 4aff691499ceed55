#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/**
 * Runs one command line (without the program name). Input path "-" reads `in`;
 * output goes to `out` unless --out is given. Returns 0 on success or a passing
 * verification, 1 when a verification fails and 2 on usage or input errors.
 */
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace polycut::cli
