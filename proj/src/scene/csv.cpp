#include "aquanim/scene/csv.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <string>

#include "aquanim/core/errors.hpp"

namespace aquanim {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::vector<double> parse_csv_values(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<double> values;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    const bool first = !seen_content;
    seen_content = true;
    const auto value = parse_number(line);
    if (!value) {
      if (first) continue;  // header
      throw IngestionError("line " + std::to_string(line_no) +
                           ": not a number: '" + std::string(line) + "'");
    }
    if (!std::isfinite(*value)) {
      throw IngestionError("line " + std::to_string(line_no) +
                           ": value is not finite");
    }
    values.push_back(*value);
  }
  return values;
}

}  // namespace aquanim
