#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aquanim/scene/scene.hpp"

namespace aquanim {

// Axis-aligned rectangle in model space (y-up). A rect with an empty
// segment_id is the outline of a container without liquid.
struct FrameRect {
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = 0.0;
  std::string color_key;
  std::string segment_id;

  double area() const noexcept { return width * height; }
  friend bool operator==(const FrameRect&, const FrameRect&) = default;
};

enum class GuideRole { Start, End };

std::string_view to_string(GuideRole role);

// Horizontal guide at a remanent liquid level of a container.
struct Guide {
  std::string container_id;
  double y = 0.0;
  GuideRole role = GuideRole::Start;

  friend bool operator==(const Guide&, const Guide&) = default;
};

// Rects are listed in draw order: later rects paint over earlier ones.
struct Frame {
  double t = 0.0;
  std::vector<FrameRect> rects;
  std::vector<Guide> guides;

  double total_area() const noexcept;
  friend bool operator==(const Frame&, const Frame&) = default;
};

// Static rendering of a scene: segments stacked from each baseline,
// containers without liquid as zero-height outlines.
Frame scene_frame(const Scene& scene, double t = 0.0);

}  // namespace aquanim
