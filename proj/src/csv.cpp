#include "vimp/csv.hpp"

#include <charconv>
#include <system_error>

#include "vimp/errors.hpp"

namespace vimp {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string format_u64(std::uint64_t value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

template <typename T>
T parse_number(std::string_view field, const std::string& location) {
  T value{};
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || field.empty()) {
    throw ParseError("not a number at " + location + ": '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

double parse_double(std::string_view field, const std::string& location) {
  return parse_number<double>(field, location);
}

long parse_long(std::string_view field, const std::string& location) {
  return parse_number<long>(field, location);
}

std::uint64_t parse_u64(std::string_view field, const std::string& location) {
  return parse_number<std::uint64_t>(field, location);
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      fields.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return fields;
}

}  // namespace vimp
