#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "aquanim/plan/frame.hpp"
#include "aquanim/scene/scene.hpp"

namespace aquanim::testing {

inline double rel_err(double actual, double expected) {
  const double scale = expected != 0.0 ? std::abs(expected) : 1.0;
  return std::abs(actual - expected) / scale;
}

// Fixed-seed generator so property failures reproduce.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng_); }
  double normal() { return std::normal_distribution<>(0.0, 1.0)(rng_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin() { return index(0, 1) == 1; }
  std::vector<double> samples(std::size_t n, bool gaussian) {
    std::vector<double> out(n);
    for (auto& v : out) v = gaussian ? normal() : uniform(-3.0, 5.0);
    return out;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Random stacked-bar scene: `bars` containers with 1..max_stack segments.
inline Scene random_scene(Gen& g, std::size_t bars, std::size_t max_stack) {
  std::vector<Container> containers;
  std::vector<LiquidSegment> segments;
  double x = 0.0;
  for (std::size_t b = 0; b < bars; ++b) {
    const double w = g.uniform(0.3, 2.0);
    const std::string cid = "c" + std::to_string(b);
    containers.push_back({cid, x, w, 0.0});
    x += w + g.uniform(0.0, 0.5);
    const auto n = g.index(1, max_stack);
    for (std::size_t k = 0; k < n; ++k) {
      segments.push_back({cid + "s" + std::to_string(k), "k" + std::to_string(k),
                          g.uniform(0.1, 5.0), cid, k});
    }
  }
  return Scene(std::move(containers), std::move(segments));
}

// Largest coordinate gap between the scene's rects and the frame's rects with
// the same segment id. Frame rects of segments the scene does not know must
// have zero area; failing that, or a missing rect, yields +inf.
inline double scene_gap(const Frame& frame, const Scene& scene) {
  const Frame expected = scene_frame(scene);
  double gap = 0.0;
  for (const auto& e : expected.rects) {
    if (e.segment_id.empty()) continue;
    const FrameRect* found = nullptr;
    for (const auto& r : frame.rects) {
      if (r.segment_id == e.segment_id) found = &r;
    }
    if (found == nullptr) return INFINITY;
    gap = std::max({gap, std::abs(found->x - e.x), std::abs(found->y - e.y),
                    std::abs(found->width - e.width), std::abs(found->height - e.height)});
  }
  for (const auto& r : frame.rects) {
    if (r.segment_id.empty() || scene.find_segment(r.segment_id) != nullptr) continue;
    if (r.area() != 0.0) return INFINITY;
  }
  return gap;
}

}  // namespace aquanim::testing
