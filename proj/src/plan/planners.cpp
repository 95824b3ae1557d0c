#include "aquanim/plan/planners.hpp"

#include <cmath>
#include <map>
#include <set>

#include "aquanim/core/errors.hpp"

namespace aquanim {
namespace {

const LiquidSegment* only_segment(const Scene& scene, const Container& c) {
  const auto stack = scene.stack(c.id);
  return stack.empty() ? nullptr : stack.front();
}

}  // namespace

TransitionPlan plan_rebin(std::span<const double> data, std::size_t m, std::size_t n,
                          const RebinOptions& options) {
  if (m == 0 || n == 0) throw DomainError("bin counts must be at least 1");
  const BinRange range = options.range ? *options.range : data_range(data);
  const Scene source = histogram_to_scene(bin(data, m, range), {.prefix = "src"});
  if (m == n) return TransitionPlan(source, source, {});
  const Scene target = histogram_to_scene(bin(data, n, range), {.prefix = "dst"});

  TransferPayload payload;
  std::vector<double> widths, start, end;
  auto add = [&](const Scene& scene, const Container& c, bool from_source) {
    const LiquidSegment* s = only_segment(scene, c);
    const double level = s == nullptr ? 0.0 : s->area / c.width;
    payload.container_ids.push_back(c.id);
    payload.segment_ids.push_back(s == nullptr ? "" : s->id);
    widths.push_back(c.width);
    start.push_back(from_source ? level : 0.0);
    end.push_back(from_source ? 0.0 : level);
  };
  for (const auto& c : target.containers()) add(target, c, false);
  for (const auto& c : source.containers()) add(source, c, true);
  payload.start = LevelState(widths, std::move(start));
  payload.end = LevelState(std::move(widths), std::move(end));

  Track track{TrackKind::Transfer, std::move(payload), {}, options.easing};
  return TransitionPlan(source, target, {std::move(track)});
}

TransitionPlan plan_align(const Scene& source, const std::vector<std::string>& selected,
                          Easing easing) {
  std::map<std::string, std::string> selection;  // container -> segment
  for (const auto& id : selected) {
    const LiquidSegment* s = source.find_segment(id);
    if (s == nullptr) throw ParameterError("unknown segment id '" + id + "'");
    auto [it, inserted] = selection.emplace(s->container_id, id);
    if (!inserted && it->second != id) {
      throw ParameterError("container '" + s->container_id +
                           "' has more than one selected segment ('" + it->second +
                           "', '" + id + "')");
    }
  }

  std::vector<LiquidSegment> segments = source.segments();
  std::vector<Track> tracks;
  for (const auto& c : source.containers()) {
    auto sel = selection.find(c.id);
    if (sel == selection.end()) continue;
    const auto stack = source.stack(c.id);
    if (stack.front()->id == sel->second) continue;

    std::vector<double> start_h, end_h;
    std::vector<std::string> start_ids, end_ids;
    std::map<std::string, std::size_t> new_index;
    for (const auto* s : stack) {
      if (s->id == sel->second) {
        end_ids.insert(end_ids.begin(), s->id);
        end_h.insert(end_h.begin(), s->area / c.width);
      } else {
        end_ids.push_back(s->id);
        end_h.push_back(s->area / c.width);
      }
      start_ids.push_back(s->id);
      start_h.push_back(s->area / c.width);
    }
    for (std::size_t i = 0; i < end_ids.size(); ++i) new_index[end_ids[i]] = i;
    for (auto& s : segments) {
      if (s.container_id == c.id) s.stack_index = new_index.at(s.id);
    }
    ShiftPayload payload{c.id, StackState(c.width, std::move(start_h), std::move(start_ids)),
                         StackState(c.width, std::move(end_h), std::move(end_ids)),
                         {sel->second}};
    tracks.push_back({TrackKind::Shift, std::move(payload), {}, easing});
  }

  TransitionPlan plan(source, Scene(source.containers(), std::move(segments)),
                      std::move(tracks));
  plan.set_highlight(selected);
  return plan;
}

TransitionPlan plan_reshape(const Scene& source, const std::string& container_id,
                            double new_width, Anchor anchor, Easing easing) {
  const Container* c = source.find_container(container_id);
  if (c == nullptr) throw ParameterError("unknown container '" + container_id + "'");
  if (!(new_width > 0.0) || !std::isfinite(new_width)) {
    throw DomainError("new width must be positive and finite");
  }
  const auto stack = source.stack(container_id);
  if (stack.size() > 1) {
    throw UnsupportedError("reshaping a container with several segments is not supported");
  }
  if (stack.empty()) {
    throw ParameterError("container '" + container_id + "' holds no liquid to reshape");
  }
  const LiquidSegment& segment = *stack.front();
  const ReshapeSpec spec = ReshapeSpec::from_area(segment.area, c->width, new_width, anchor);

  std::vector<Container> containers = source.containers();
  for (auto& k : containers) {
    if (k.id != container_id) continue;
    switch (anchor) {
      case Anchor::BottomLeft:
        break;
      case Anchor::BottomRight:
        k.x = c->x + spec.w0() - new_width;
        break;
      case Anchor::BottomCenter:
        k.x = c->x + (spec.w0() - new_width) / 2.0;
        break;
    }
    k.width = new_width;
  }
  Track track{TrackKind::Reshape, ReshapePayload{container_id, segment.id, spec}, {}, easing};
  return TransitionPlan(source, Scene(std::move(containers), source.segments()),
                        {std::move(track)});
}

TransitionPlan plan_fill(const Scene& source, const std::string& container_id,
                         double new_level, Easing easing) {
  const Container* c = source.find_container(container_id);
  if (c == nullptr) throw ParameterError("unknown container '" + container_id + "'");
  if (!(new_level > 0.0) || !std::isfinite(new_level)) {
    throw DomainError("new level must be positive and finite");
  }
  const auto stack = source.stack(container_id);
  if (stack.size() != 1) {
    throw UnsupportedError("fill and empty need a container with exactly one segment");
  }
  const LiquidSegment& segment = *stack.front();
  const double level = segment.area / c->width;
  std::vector<LiquidSegment> segments = source.segments();
  for (auto& s : segments) {
    if (s.id == segment.id) s.area = new_level * c->width;
  }
  const TrackKind kind = new_level >= level ? TrackKind::Fill : TrackKind::Empty;
  Track track{kind, LevelPayload{container_id, segment.id, level, new_level}, {}, easing};
  return TransitionPlan(source, Scene(source.containers(), std::move(segments)),
                        {std::move(track)}, false);
}

}  // namespace aquanim
