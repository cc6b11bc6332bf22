#pragma once

#include <ostream>

namespace diffhopf::cli {

/// Runs one subcommand and writes its JSON report to `out`.
/// Exit codes: 0 pass, 1 property failure, 2 input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace diffhopf::cli
