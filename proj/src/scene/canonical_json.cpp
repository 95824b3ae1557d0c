#include "aquanim/scene/canonical_json.hpp"

#include <cmath>
#include <cstdio>

#include "aquanim/core/errors.hpp"

namespace aquanim {
namespace {

void write(const nlohmann::json& v, std::string& out) {
  using nlohmann::json;
  switch (v.type()) {
    case json::value_t::null:
      out += "null";
      break;
    case json::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      break;
    case json::value_t::number_integer:
      out += std::to_string(v.get<std::int64_t>());
      break;
    case json::value_t::number_unsigned:
      out += std::to_string(v.get<std::uint64_t>());
      break;
    case json::value_t::number_float:
      out += format_number(v.get<double>());
      break;
    case json::value_t::string:
      out += json(v.get_ref<const std::string&>()).dump();
      break;
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ',';
        first = false;
        write(item, out);
      }
      out += ']';
      break;
    }
    case json::value_t::object: {
      // nlohmann::json stores objects in a std::map, so iteration is sorted.
      out += '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ',';
        first = false;
        out += json(key).dump();
        out += ':';
        write(item, out);
      }
      out += '}';
      break;
    }
    default:
      throw DomainError("cannot serialize binary JSON values");
  }
}

}  // namespace

std::string format_number(double value) {
  if (!std::isfinite(value)) {
    throw DomainError("cannot serialize a non-finite number");
  }
  if (value == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string canonical_dump(const nlohmann::json& value) {
  std::string out;
  write(value, out);
  return out;
}

}  // namespace aquanim
