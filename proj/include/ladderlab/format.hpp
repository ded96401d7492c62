#pragma once

#include <charconv>
#include <cstddef>
#include <string>

namespace ladderlab {

/// Shortest decimal form that parses back to exactly the same double.
[[nodiscard]] inline std::string format_double(double value) {
    char buffer[32];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    (void)ec; // 32 chars always suffice for the shortest round-trip form
    return std::string(buffer, static_cast<std::size_t>(end - buffer));
}

} // namespace ladderlab
