#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vimp {

// Shortest decimal form that round-trips to the same double (std::to_chars).
std::string format_double(double value);

std::string format_u64(std::uint64_t value);

// Strict numeric parses; throw ParseError with the supplied location string
// (e.g. "row 3, column 2") on any trailing garbage or empty field.
double parse_double(std::string_view field, const std::string& location);
long parse_long(std::string_view field, const std::string& location);
std::uint64_t parse_u64(std::string_view field, const std::string& location);

// Splits one CSV line on commas. No quoting: every schema in this project is
// purely numeric plus fixed identifier tokens.
std::vector<std::string_view> split_csv_line(std::string_view line);

}  // namespace vimp
