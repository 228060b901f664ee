#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lsl {

inline constexpr const char* kVersion = "lsl 0.1.0";

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNonExhaustive = 3;
inline constexpr int kExitMalformed = 4;
inline constexpr int kExitKindMismatch = 5;

/// Runs one subcommand. args excludes the program name. Reports go to `out`
/// (or the --out file), diagnostics to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsl
