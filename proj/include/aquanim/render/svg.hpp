#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "aquanim/plan/frame.hpp"

namespace aquanim {

struct Viewport {
  int width_px = 800;
  int height_px = 500;
  int margin_px = 24;
};

// Okabe-Ito categorical cycle, colorblind safe.
std::vector<std::string> default_palette();
// Reserved for highlighted (selected) segments.
inline constexpr const char* kAccentColor = "#d81bd8";

struct RenderConfig {
  Viewport viewport;
  std::vector<std::string> palette = default_palette();
  std::string accent = kAccentColor;
  std::string background = "#ffffff";
  std::set<std::string> highlight;

  // Throws RenderError on non-positive dimensions, a margin that leaves no
  // plot area, or an empty palette.
  void validate() const;
};

// Uniform model -> screen map (y flipped), bottom-left aligned in the plot
// area.
struct ViewTransform {
  double scale = 1.0;
  double min_x = 0.0;
  double min_y = 0.0;
  double origin_x = 0.0;  // screen x of min_x
  double origin_y = 0.0;  // screen y of min_y

  double x(double model_x) const { return origin_x + (model_x - min_x) * scale; }
  double y(double model_y) const { return origin_y - (model_y - min_y) * scale; }
};

// Transform and colors shared by all frames of a stream so sizes and hues are
// comparable over time.
struct StreamLayout {
  ViewTransform view;
  std::map<std::string, std::string> colors;  // color_key -> hex
};

// Union bounding box of every frame fixes the transform. Throws RenderError on
// coordinates beyond 1e12 in magnitude or non-finite values.
StreamLayout make_layout(std::span<const Frame> frames, const RenderConfig& cfg);

std::string render_svg(const Frame& frame, const RenderConfig& cfg,
                       const StreamLayout& layout);
// Single-frame convenience: the layout is fitted to this frame alone.
std::string render_svg(const Frame& frame, const RenderConfig& cfg);

// Fixed 3-decimal formatting with trailing zeros trimmed.
std::string format_coord(double value);

}  // namespace aquanim
