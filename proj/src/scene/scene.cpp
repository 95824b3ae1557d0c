#include "aquanim/scene/scene.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "aquanim/core/errors.hpp"

namespace aquanim {

Scene::Scene(std::vector<Container> containers,
             std::vector<LiquidSegment> segments)
    : containers_(std::move(containers)), segments_(std::move(segments)) {
  std::set<std::string> container_ids;
  for (const auto& c : containers_) {
    if (!container_ids.insert(c.id).second) {
      throw InvariantError("duplicate container id '" + c.id + "'");
    }
    if (!(c.width > 0.0) || !std::isfinite(c.width)) {
      throw InvariantError("container '" + c.id +
                           "' must have a positive finite width");
    }
    if (!std::isfinite(c.x) || !std::isfinite(c.baseline_y)) {
      throw InvariantError("container '" + c.id + "' has a non-finite position");
    }
  }

  std::set<std::string> segment_ids;
  std::map<std::string, std::set<std::size_t>> slots;
  for (const auto& s : segments_) {
    if (!segment_ids.insert(s.id).second) {
      throw InvariantError("duplicate segment id '" + s.id + "'");
    }
    if (!(s.area > 0.0) || !std::isfinite(s.area)) {
      throw InvariantError("segment '" + s.id +
                           "' must have a positive finite area");
    }
    if (!container_ids.contains(s.container_id)) {
      throw InvariantError("segment '" + s.id + "' references unknown container '" +
                           s.container_id + "'");
    }
    if (!slots[s.container_id].insert(s.stack_index).second) {
      throw InvariantError("container '" + s.container_id +
                           "' has two segments at stack index " +
                           std::to_string(s.stack_index));
    }
    total_area_ += s.area;
  }
  for (const auto& [container_id, indices] : slots) {
    // std::set is ordered, so 0..n-1 without gaps means the last is n-1.
    if (*indices.rbegin() != indices.size() - 1) {
      throw InvariantError("container '" + container_id +
                           "' has a gap in its stack indices");
    }
  }
}

const Container* Scene::find_container(const std::string& id) const {
  auto it = std::find_if(containers_.begin(), containers_.end(),
                         [&](const Container& c) { return c.id == id; });
  return it == containers_.end() ? nullptr : &*it;
}

const LiquidSegment* Scene::find_segment(const std::string& id) const {
  auto it = std::find_if(segments_.begin(), segments_.end(),
                         [&](const LiquidSegment& s) { return s.id == id; });
  return it == segments_.end() ? nullptr : &*it;
}

std::vector<const LiquidSegment*> Scene::stack(
    const std::string& container_id) const {
  std::vector<const LiquidSegment*> out;
  for (const auto& s : segments_) {
    if (s.container_id == container_id) out.push_back(&s);
  }
  std::sort(out.begin(), out.end(), [](const auto* a, const auto* b) {
    return a->stack_index < b->stack_index;
  });
  return out;
}

double Scene::segment_height(const LiquidSegment& segment) const {
  const Container* c = find_container(segment.container_id);
  if (c == nullptr) {
    throw InvariantError("segment '" + segment.id + "' is not in this scene");
  }
  return segment.area / c->width;
}

double Scene::segment_bottom(const LiquidSegment& segment) const {
  const Container* c = find_container(segment.container_id);
  if (c == nullptr) {
    throw InvariantError("segment '" + segment.id + "' is not in this scene");
  }
  double level = 0.0;
  for (const auto* s : stack(segment.container_id)) {
    if (s->stack_index == segment.stack_index) break;
    level += s->area / c->width;
  }
  return c->baseline_y + level;
}

}  // namespace aquanim
