#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace c4star::cli {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;         ///< verify: the graph is not a witness
constexpr int exit_budget = 2;          ///< search: node budget exhausted
constexpr int exit_usage = 64;
constexpr int exit_data = 65;           ///< domain error, e.g. q not a prime power
constexpr int exit_no_input = 66;

/// Runs one command. args excludes the program name.
auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;

} // namespace c4star::cli
