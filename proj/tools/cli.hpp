#pragma once

// Command-line front end. run_cli is the whole program minus process setup,
// so tests drive it with captured streams.
//
// Exit codes: 0 pass, 1 mathematical failure, 2 input or usage error.

#include "gi/abelian_group.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gi::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

/// "Z2xZ2", "2x2", "Z4", "[2,2]" or {"orders": [2,2]}.
FinAbGroup parse_group_spec(const std::string& spec);
/// "0,1,2" for cyclic groups, "(1,0),(0,1)" or a JSON array otherwise.
std::vector<GroupElement> parse_tuple_spec(const std::string& spec, const FinAbGroup& group);

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gi::cli
