#include "aquanim/render/frames_json.hpp"

#include "aquanim/core/errors.hpp"
#include "aquanim/scene/canonical_json.hpp"
#include "aquanim/scene/json_schema.hpp"

namespace aquanim {

using nlohmann::json;

json frames_to_json(std::span<const Frame> frames) {
  json out = json::array();
  for (const auto& f : frames) {
    json rects = json::array();
    for (const auto& r : f.rects) {
      rects.push_back({{"x", r.x},
                       {"y", r.y},
                       {"width", r.width},
                       {"height", r.height},
                       {"color_key", r.color_key},
                       {"segment_id", r.segment_id}});
    }
    json guides = json::array();
    for (const auto& g : f.guides) {
      guides.push_back({{"container_id", g.container_id},
                        {"y", g.y},
                        {"role", std::string(to_string(g.role))}});
    }
    out.push_back({{"t", f.t}, {"rects", std::move(rects)}, {"guides", std::move(guides)}});
  }
  return {{"version", kFramesVersion}, {"frames", std::move(out)}};
}

std::string export_frames_json(std::span<const Frame> frames) {
  if (frames.empty()) throw DomainError("cannot export an empty frame stream");
  return canonical_dump(frames_to_json(frames));
}

std::vector<Frame> parse_frames_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.what(), e.byte);
  }
  schema::require_object(doc, "");
  schema::reject_unknown(doc, "", {"version", "frames"});
  if (schema::integer(schema::field(doc, "", "version"), "version") != kFramesVersion) {
    throw SchemaError("version", "unsupported version (expected 1)");
  }
  const auto& arr = schema::require_array(schema::field(doc, "", "frames"), "frames");
  std::vector<Frame> frames;
  frames.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto path = schema::index("frames", i);
    const auto& fj = schema::require_object(arr[i], path);
    schema::reject_unknown(fj, path, {"t", "rects", "guides"});
    Frame f;
    f.t = schema::number(schema::field(fj, path, "t"), schema::join(path, "t"));
    const auto rpath = schema::join(path, "rects");
    const auto& rarr = schema::require_array(schema::field(fj, path, "rects"), rpath);
    for (std::size_t k = 0; k < rarr.size(); ++k) {
      const auto p = schema::index(rpath, k);
      const auto& rj = schema::require_object(rarr[k], p);
      schema::reject_unknown(rj, p, {"x", "y", "width", "height", "color_key", "segment_id"});
      FrameRect r;
      r.x = schema::number(schema::field(rj, p, "x"), schema::join(p, "x"));
      r.y = schema::number(schema::field(rj, p, "y"), schema::join(p, "y"));
      r.width = schema::number(schema::field(rj, p, "width"), schema::join(p, "width"));
      r.height = schema::number(schema::field(rj, p, "height"), schema::join(p, "height"));
      if (r.width < 0.0 || r.height < 0.0) {
        throw SchemaError(p, "rect dimensions must be non-negative");
      }
      r.color_key = schema::string(schema::field(rj, p, "color_key"), schema::join(p, "color_key"));
      r.segment_id =
          schema::string(schema::field(rj, p, "segment_id"), schema::join(p, "segment_id"));
      f.rects.push_back(std::move(r));
    }
    const auto gpath = schema::join(path, "guides");
    const auto& garr = schema::require_array(schema::field(fj, path, "guides"), gpath);
    for (std::size_t k = 0; k < garr.size(); ++k) {
      const auto p = schema::index(gpath, k);
      const auto& gj = schema::require_object(garr[k], p);
      schema::reject_unknown(gj, p, {"container_id", "y", "role"});
      Guide g;
      g.container_id =
          schema::string(schema::field(gj, p, "container_id"), schema::join(p, "container_id"));
      g.y = schema::number(schema::field(gj, p, "y"), schema::join(p, "y"));
      const auto role = schema::string(schema::field(gj, p, "role"), schema::join(p, "role"));
      if (role == "start") {
        g.role = GuideRole::Start;
      } else if (role == "end") {
        g.role = GuideRole::End;
      } else {
        throw SchemaError(schema::join(p, "role"), "expected 'start' or 'end'");
      }
      f.guides.push_back(std::move(g));
    }
    frames.push_back(std::move(f));
  }
  return frames;
}

}  // namespace aquanim
