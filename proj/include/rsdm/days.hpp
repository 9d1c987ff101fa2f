#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rsdm {

/// Whole UTC days since 1970-01-01.
using DayNumber = std::int64_t;

/// Parses an ISO-8601 calendar date (YYYY-MM-DD). Throws ParseError.
DayNumber parse_iso_date(std::string_view text);
std::string format_iso_date(DayNumber day);

}  // namespace rsdm
