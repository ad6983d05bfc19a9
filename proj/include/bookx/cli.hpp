#ifndef BOOKX_CLI_HPP
#define BOOKX_CLI_HPP

#include <iosfwd>

namespace bookx {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
/// Correct but inexact: a bound, or a search that ran out of budget.
inline constexpr int kExitInexact = 2;

/// Parses argv, runs the subcommand and returns the exit status. Results go
/// to `out`, usage and diagnostics to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bookx

#endif  // BOOKX_CLI_HPP
