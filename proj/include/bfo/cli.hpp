#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bfo::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

// Name of the environment variable holding the default worker count.
inline constexpr const char* workers_env = "BFO_WORKERS";

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses "a..b" (odd sizes in the closed range) or "a,b,c".
std::vector<std::size_t> parse_sizes(const std::string& text);

} // namespace bfo::cli
