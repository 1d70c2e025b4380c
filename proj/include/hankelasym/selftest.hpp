#pragma once

#include <ostream>

namespace hankelasym {

/// Runs the built-in invariant suite, printing one ok/FAIL line per check.
/// Returns true when every check passes. Intended for the `selftest` CLI
/// subcommand; the full doctest suites cover strictly more.
bool run_selftest(std::ostream& out);

} // namespace hankelasym
