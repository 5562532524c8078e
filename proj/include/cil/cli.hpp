#pragma once

#include <iosfwd>

namespace cil
{

// Exit codes of the command-line front end.
enum ExitCode : int
{
    exit_positive = 0,  // holds / valid / proof accepted / no violations
    exit_negative = 1,
    exit_usage = 2      // bad arguments, unreadable or invalid input
};

// Subcommands: check, validate, prove, fuzz, oracle-diff. Reports go to
// `out` as JSON, diagnostics to `err`.
int run_cli( int argc, const char* const* argv, std::ostream& out, std::ostream& err );

} // namespace cil
