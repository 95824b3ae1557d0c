#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

#include <json.hpp>

// Small helpers for strict structural validation of JSON documents. Every
// failure raises SchemaError carrying the path of the offending field.
namespace aquanim::schema {

using nlohmann::json;

std::string join(const std::string& path, std::string_view key);
std::string index(const std::string& path, std::size_t i);

const json& require_object(const json& v, const std::string& path);
const json& require_array(const json& v, const std::string& path);
// Rejects keys outside `allowed`.
void reject_unknown(const json& object, const std::string& path,
                    std::initializer_list<std::string_view> allowed);
const json& field(const json& object, const std::string& path,
                  std::string_view key);
const json* optional_field(const json& object, std::string_view key);

double number(const json& v, const std::string& path);
std::int64_t integer(const json& v, const std::string& path);
std::string string(const json& v, const std::string& path);

}  // namespace aquanim::schema
