#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace lexres {

// UTC, second precision.
using Timestamp = std::chrono::sys_seconds;
using Duration = std::chrono::seconds;

constexpr Duration days(long long n) { return std::chrono::hours(24 * n); }

// Formats as `2009-03-01T00:00:00Z`.
std::string format_iso8601(Timestamp t);

// Accepts exactly the `YYYY-MM-DDTHH:MM:SSZ` form produced by format_iso8601.
std::optional<Timestamp> parse_iso8601(std::string_view text);

}  // namespace lexres
