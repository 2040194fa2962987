#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bei/graph.hpp"

namespace bei::cli {

enum ExitCode { ok = 0, error = 1, check_failed = 2 };

/// Inline family description "name:params":
///   multipartite:3,2,1   caterpillar:0,1,0,0   join-of-completes:1/2,3
///   g:3   f:3   path:5   complete:4
Graph family_from_spec(const std::string& spec);

/// Runs one command (arguments without the program name). Results and
/// errors go to `out` as JSON (or text with --format text); `in` is read
/// when the graph file is "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in);

}  // namespace bei::cli
