#include "aquanim/core/kinematics.hpp"

#include <cmath>
#include <set>

#include "aquanim/core/errors.hpp"
#include "aquanim/core/tolerance.hpp"

namespace aquanim {
namespace {

void require_progress(double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw DomainError("interpolation progress must lie in [0,1], got " +
                      std::to_string(u));
  }
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be positive and finite, got " +
                      std::to_string(value));
  }
}

// std::lerp is exact at both ends and when a == b.
double lerp(double a, double b, double u) { return std::lerp(a, b, u); }

}  // namespace

LevelState::LevelState(std::vector<double> widths, std::vector<double> levels)
    : widths_(std::move(widths)), levels_(std::move(levels)) {
  if (widths_.size() != levels_.size()) {
    throw ShapeError("level state has " + std::to_string(widths_.size()) +
                     " widths but " + std::to_string(levels_.size()) +
                     " levels");
  }
  for (double w : widths_) require_positive(w, "container width");
  for (double l : levels_) {
    if (!(l >= 0.0) || !std::isfinite(l)) {
      throw DomainError("liquid level must be non-negative and finite, got " +
                        std::to_string(l));
    }
  }
  if (!std::isfinite(total_area())) {
    throw DomainError("total liquid area is not finite");
  }
}

double LevelState::total_area() const noexcept {
  double total = 0.0;
  for (std::size_t k = 0; k < widths_.size(); ++k) {
    total += widths_[k] * levels_[k];
  }
  return total;
}

LevelState interpolate_levels(const LevelState& start, const LevelState& end,
                              double u) {
  require_progress(u);
  if (start.widths() != end.widths()) {
    throw ShapeError("start and end level states use different containers");
  }
  const double s0 = start.total_area();
  const double s1 = end.total_area();
  const double scale = s0 != 0.0 ? std::abs(s0) : 1.0;
  if (std::abs(s0 - s1) / scale > kPlanTolerance) {
    throw ConservationError("endpoint areas differ: " + std::to_string(s0) +
                            " vs " + std::to_string(s1));
  }
  std::vector<double> levels(start.size());
  for (std::size_t k = 0; k < levels.size(); ++k) {
    levels[k] = lerp(start.levels()[k], end.levels()[k], u);
  }
  return LevelState(start.widths(), std::move(levels));
}

ReshapeSpec::ReshapeSpec(double w0, double h0, double w1, double h1,
                         Anchor anchor)
    : w0_(w0), h0_(h0), w1_(w1), h1_(h1), anchor_(anchor) {
  require_positive(w0, "start width");
  require_positive(h0, "start height");
  require_positive(w1, "end width");
  require_positive(h1, "end height");
  const double a0 = w0 * h0;
  if (std::abs(a0 - w1 * h1) / a0 > kPlanTolerance) {
    throw ConservationError("reshape endpoints have different areas: " +
                            std::to_string(a0) + " vs " +
                            std::to_string(w1 * h1));
  }
}

ReshapeSpec ReshapeSpec::from_area(double area, double w0, double w1,
                                   Anchor anchor) {
  require_positive(area, "area");
  require_positive(w0, "start width");
  require_positive(w1, "end width");
  return ReshapeSpec(w0, area / w0, w1, area / w1, anchor);
}

Extent reshape_at(const ReshapeSpec& spec, double u) {
  require_progress(u);
  const double width = lerp(spec.w0(), spec.w1(), u);
  return {width, spec.area() / width};
}

double naive_vertex_lerp_area(const ReshapeSpec& spec, double u) {
  require_progress(u);
  return lerp(spec.w0(), spec.w1(), u) * lerp(spec.h0(), spec.h1(), u);
}

StackState::StackState(double container_width,
                       std::vector<double> segment_heights,
                       std::vector<std::string> segment_ids)
    : container_width_(container_width),
      heights_(std::move(segment_heights)),
      ids_(std::move(segment_ids)) {
  require_positive(container_width_, "container width");
  if (heights_.size() != ids_.size()) {
    throw ShapeError("stack has " + std::to_string(heights_.size()) +
                     " heights but " + std::to_string(ids_.size()) + " ids");
  }
  for (double h : heights_) require_positive(h, "segment height");
  std::set<std::string> seen;
  for (const auto& id : ids_) {
    if (!seen.insert(id).second) {
      throw InvariantError("segment id '" + id + "' appears twice in a stack");
    }
  }
}

std::vector<double> StackState::bottoms() const {
  std::vector<double> out(heights_.size());
  double level = 0.0;
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    out[i] = level;
    level += heights_[i];
  }
  return out;
}

double StackState::total_height() const noexcept {
  double total = 0.0;
  for (double h : heights_) total += h;
  return total;
}

std::map<std::string, double> shift_bottoms(const StackState& start_order,
                                            const StackState& end_order,
                                            double u) {
  require_progress(u);
  if (start_order.container_width() != end_order.container_width()) {
    throw ConservationError("shift endpoints use different container widths");
  }
  if (start_order.ids().size() != end_order.ids().size()) {
    throw ConservationError("shift endpoints hold different segment counts");
  }
  std::map<std::string, std::pair<double, double>> start;  // height, bottom
  const auto start_bottoms = start_order.bottoms();
  for (std::size_t i = 0; i < start_order.ids().size(); ++i) {
    start[start_order.ids()[i]] = {start_order.heights()[i], start_bottoms[i]};
  }
  std::map<std::string, double> out;
  const auto end_bottoms = end_order.bottoms();
  for (std::size_t i = 0; i < end_order.ids().size(); ++i) {
    const auto& id = end_order.ids()[i];
    auto it = start.find(id);
    if (it == start.end()) {
      throw ConservationError("segment '" + id +
                              "' only exists in the end order");
    }
    if (it->second.first != end_order.heights()[i]) {
      throw ConservationError("segment '" + id + "' changes height in a shift");
    }
    out[id] = lerp(it->second.second, end_bottoms[i], u);
  }
  return out;
}

}  // namespace aquanim
