#ifndef KEC_TOOLS_CLI_HPP
#define KEC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace kec::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kNoOneFactor = 3;
inline constexpr int kViolation = 4;
inline constexpr int kConjectureFinding = 5;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kec::cli

#endif  // KEC_TOOLS_CLI_HPP
