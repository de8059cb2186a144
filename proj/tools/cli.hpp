#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lgt::cli {

/// Exit codes of the lgt tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_gate_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_runtime_error = 3;

/// Runs the tool on argv-style arguments (without the program name).
/// Structured output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgt::cli
