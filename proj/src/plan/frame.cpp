#include "aquanim/plan/frame.hpp"

namespace aquanim {

std::string_view to_string(GuideRole role) {
  return role == GuideRole::Start ? "start" : "end";
}

double Frame::total_area() const noexcept {
  double total = 0.0;
  for (const auto& r : rects) total += r.area();
  return total;
}

Frame scene_frame(const Scene& scene, double t) {
  Frame frame;
  frame.t = t;
  for (const auto& c : scene.containers()) {
    const auto stack = scene.stack(c.id);
    if (stack.empty()) {
      frame.rects.push_back({c.x, c.baseline_y, c.width, 0.0, "", ""});
      continue;
    }
    double level = 0.0;
    for (const auto* s : stack) {
      const double h = s->area / c.width;
      frame.rects.push_back({c.x, c.baseline_y + level, c.width, h, s->color_key, s->id});
      level += h;
    }
  }
  return frame;
}

}  // namespace aquanim
