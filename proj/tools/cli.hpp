#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace psigroups::cli {

// Runs the command line `args` (args[0] is the program name). Returns 0 on
// success, 1 when `verify` finds a violated report, 2 on usage, parse or
// input errors. Diagnostics go to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

// Table limit from PSIGROUPS_MAX_ORDER, or the library default.
std::size_t max_order_from_env();

}  // namespace psigroups::cli
