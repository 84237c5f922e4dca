#pragma once

#include <iosfwd>

namespace lcsud {

/// Command-line entry point. Subcommands: simulate, costs, fig2, demo.
/// Returns 0 on success, 1 on configuration or usage errors, 2 when a
/// simulation step failed.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace lcsud
