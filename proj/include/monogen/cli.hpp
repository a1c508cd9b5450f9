#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace monogen {

enum ExitCode : int { kExitDefinite = 0, kExitInconclusive = 1, kExitInputError = 2, kExitInternalError = 3 };

// Inclusive integer range written "a..b" or "a".
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

IntRange parse_range(const std::string& text);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace monogen
