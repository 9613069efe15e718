#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "weylexp/rootsys.hpp"

namespace weylexp {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs the command line `args` (without the program name), writing
/// results to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// "--kind A,B --rank 2-4" style selections. A kind may carry its rank
/// ("E6"); F, G and H default to 4, 2 and 2.
std::vector<RootSystemKind> parse_kind_selection(const std::string &kinds, const std::string &ranks);

/// The types covered by `table`: A1-A5, B2-B4, C2-C4, D4, G2, F4, E6, with
/// E7 and E8 added when allow_large; all filtered by rank <= max_rank.
std::vector<RootSystemKind> table_scope(int max_rank, bool allow_large);

} // namespace weylexp
