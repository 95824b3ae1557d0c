#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aquanim/plan/frame.hpp"

namespace aquanim {

inline constexpr int kFramesVersion = 1;

nlohmann::json frames_to_json(std::span<const Frame> frames);

// {version:1, frames:[{t, rects:[...], guides:[...]}]} in canonical form.
// Throws DomainError on an empty stream.
std::string export_frames_json(std::span<const Frame> frames);

// Strict inverse of export_frames_json. Throws SyntaxError or SchemaError.
std::vector<Frame> parse_frames_json(std::string_view text);

}  // namespace aquanim
