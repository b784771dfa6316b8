#pragma once

#include <ostream>

namespace desir {

/// Entry point of the `desir` tool. JSON goes to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 input error, 2 inconsistent assessment where a
/// consistent one is required.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace desir
