#pragma once

#include <ostream>

namespace pgeom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

/// Runs one command. Returns 0 on success, 1 for a negative answer
/// ("not-contained", "not-found") and 2 on any error, after writing
/// {"error":"<Code>","message":"..."} to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pgeom::cli
