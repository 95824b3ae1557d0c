#include "aquanim/plan/plan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "aquanim/core/errors.hpp"
#include "aquanim/core/tolerance.hpp"

namespace aquanim {

std::string_view to_string(TrackKind kind) {
  switch (kind) {
    case TrackKind::Fill:
      return "fill";
    case TrackKind::Empty:
      return "empty";
    case TrackKind::Transfer:
      return "transfer";
    case TrackKind::Shift:
      return "shift";
    case TrackKind::Reshape:
      return "reshape";
  }
  return "transfer";
}

double Track::progress(double t) const {
  const double local = std::clamp((t - window.start) / (window.end - window.start), 0.0, 1.0);
  return ease(easing, local);
}

std::vector<std::string> Track::container_ids() const {
  return std::visit(
      [](const auto& p) -> std::vector<std::string> {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, TransferPayload>) {
          return p.container_ids;
        } else {
          return {p.container_id};
        }
      },
      payload);
}

TransitionPlan::TransitionPlan(Scene source, Scene target, std::vector<Track> tracks,
                               bool conserving)
    : source_(std::move(source)),
      target_(std::move(target)),
      tracks_(std::move(tracks)),
      conserving_(conserving) {
  containers_ = source_.containers();
  for (const auto& c : target_.containers()) {
    if (source_.find_container(c.id) == nullptr) containers_.push_back(c);
  }
  validate();
}

const Container& TransitionPlan::container(const std::string& id) const {
  auto it = std::find_if(containers_.begin(), containers_.end(),
                         [&](const Container& c) { return c.id == id; });
  if (it == containers_.end()) {
    throw ParameterError("unknown container '" + id + "'");
  }
  return *it;
}

std::string TransitionPlan::color_of(const std::string& segment_id) const {
  if (segment_id.empty()) return {};
  if (const auto* s = source_.find_segment(segment_id)) return s->color_key;
  if (const auto* s = target_.find_segment(segment_id)) return s->color_key;
  return {};
}

namespace {

bool kind_matches(TrackKind kind, const TrackPayload& payload) {
  switch (kind) {
    case TrackKind::Fill:
    case TrackKind::Empty:
      return std::holds_alternative<LevelPayload>(payload);
    case TrackKind::Transfer:
      return std::holds_alternative<TransferPayload>(payload);
    case TrackKind::Shift:
      return std::holds_alternative<ShiftPayload>(payload);
    case TrackKind::Reshape:
      return std::holds_alternative<ReshapePayload>(payload);
  }
  return false;
}

double relative_gap(double a, double b) {
  const double scale = a != 0.0 ? std::abs(a) : 1.0;
  return std::abs(a - b) / scale;
}

// Stack of a container as (id, area) pairs, bottom first.
std::vector<std::pair<std::string, double>> stack_of(const Scene& scene,
                                                     const std::string& id) {
  std::vector<std::pair<std::string, double>> out;
  for (const auto* s : scene.stack(id)) out.emplace_back(s->id, s->area);
  return out;
}

}  // namespace

void TransitionPlan::validate() const {
  std::set<std::string> animated;
  double level_area_change = 0.0;
  for (std::size_t i = 0; i < tracks_.size(); ++i) {
    const auto& track = tracks_[i];
    const std::string where = "track " + std::to_string(i) + ": ";
    if (!kind_matches(track.kind, track.payload)) {
      throw ParameterError(where + "payload does not match kind '" +
                           std::string(to_string(track.kind)) + "'");
    }
    const auto& w = track.window;
    if (!(w.start >= 0.0 && w.start < w.end && w.end <= 1.0)) {
      throw ParameterError(where + "window must satisfy 0 <= start < end <= 1");
    }
    for (const auto& id : track.container_ids()) {
      container(id);
      if (!animated.insert(id).second) {
        throw ParameterError(where + "container '" + id +
                             "' is animated by more than one track");
      }
    }
    if (const auto* p = std::get_if<TransferPayload>(&track.payload)) {
      if (p->container_ids.size() != p->start.size() ||
          p->segment_ids.size() != p->start.size() ||
          p->start.widths() != p->end.widths()) {
        throw ParameterError(where + "transfer payload vectors do not line up");
      }
      for (std::size_t k = 0; k < p->container_ids.size(); ++k) {
        if (container(p->container_ids[k]).width != p->start.widths()[k]) {
          throw ParameterError(where + "transfer width differs from container '" +
                               p->container_ids[k] + "'");
        }
      }
      if (relative_gap(p->start.total_area(), p->end.total_area()) > kPlanTolerance) {
        throw ConservationError(where + "transfer endpoints hold different areas");
      }
    } else if (const auto* p = std::get_if<LevelPayload>(&track.payload)) {
      if (!(p->start_level >= 0.0) || !(p->end_level >= 0.0)) {
        throw ParameterError(where + "levels must be non-negative");
      }
      level_area_change += (p->end_level - p->start_level) * container(p->container_id).width;
    } else if (const auto* p = std::get_if<ShiftPayload>(&track.payload)) {
      if (container(p->container_id).width != p->start.container_width()) {
        throw ParameterError(where + "shift width differs from its container");
      }
    } else if (const auto* p = std::get_if<ReshapePayload>(&track.payload)) {
      if (container(p->container_id).width != p->spec.w0()) {
        throw ParameterError(where + "reshape start width differs from its container");
      }
    }
  }

  // Anything not animated has to stay put.
  for (const auto& c : containers_) {
    if (animated.contains(c.id)) continue;
    const Container* a = source_.find_container(c.id);
    const Container* b = target_.find_container(c.id);
    const bool a_has = a != nullptr && !source_.stack(c.id).empty();
    const bool b_has = b != nullptr && !target_.stack(c.id).empty();
    if ((a_has || b_has) &&
        (a == nullptr || b == nullptr || !(*a == *b) ||
         stack_of(source_, c.id) != stack_of(target_, c.id))) {
      throw ParameterError("container '" + c.id + "' changes but no track animates it");
    }
  }

  if (conserving_) {
    const double s = source_.total_area();
    if (relative_gap(s, target_.total_area()) > kPlanTolerance) {
      throw ConservationError("source and target scenes hold different areas");
    }
    if (std::abs(level_area_change) / (s != 0.0 ? s : 1.0) > kPlanTolerance) {
      throw ConservationError("fill and empty tracks do not balance");
    }
  }
}

namespace {

void emit_transfer(const TransitionPlan& plan, const TransferPayload& p, double u,
                   Frame& frame) {
  const LevelState now = interpolate_levels(p.start, p.end, u);
  for (std::size_t k = 0; k < p.container_ids.size(); ++k) {
    const Container& c = plan.container(p.container_ids[k]);
    frame.rects.push_back({c.x, c.baseline_y, c.width, now.levels()[k],
                           plan.color_of(p.segment_ids[k]), p.segment_ids[k]});
  }
}

void emit_level(const TransitionPlan& plan, const LevelPayload& p, double u,
                Frame& frame) {
  const Container& c = plan.container(p.container_id);
  const double level = (1.0 - u) * p.start_level + u * p.end_level;
  frame.rects.push_back(
      {c.x, c.baseline_y, c.width, level, plan.color_of(p.segment_id), p.segment_id});
}

void emit_shift(const TransitionPlan& plan, const ShiftPayload& p, double u,
                Frame& frame) {
  const Container& c = plan.container(p.container_id);
  const auto bottoms = shift_bottoms(p.start, p.end, u);
  std::vector<std::size_t> order;
  std::vector<std::size_t> last;
  for (std::size_t i = 0; i < p.end.ids().size(); ++i) {
    const bool moving = std::find(p.draw_last.begin(), p.draw_last.end(),
                                  p.end.ids()[i]) != p.draw_last.end();
    (moving ? last : order).push_back(i);
  }
  order.insert(order.end(), last.begin(), last.end());
  for (std::size_t i : order) {
    const auto& id = p.end.ids()[i];
    frame.rects.push_back({c.x, c.baseline_y + bottoms.at(id), c.width,
                           p.end.heights()[i], plan.color_of(id), id});
  }
}

void emit_reshape(const TransitionPlan& plan, const ReshapePayload& p, double u,
                  Frame& frame) {
  const Container& c = plan.container(p.container_id);
  const Extent e = reshape_at(p.spec, u);
  double x = c.x;
  switch (p.spec.anchor()) {
    case Anchor::BottomLeft:
      break;
    case Anchor::BottomRight:
      x = c.x + p.spec.w0() - e.width;
      break;
    case Anchor::BottomCenter:
      x = c.x + (p.spec.w0() - e.width) / 2.0;
      break;
  }
  frame.rects.push_back(
      {x, c.baseline_y, e.width, e.height, plan.color_of(p.segment_id), p.segment_id});
  frame.guides.push_back({c.id, c.baseline_y + p.spec.h0(), GuideRole::Start});
  frame.guides.push_back({c.id, c.baseline_y + p.spec.h1(), GuideRole::End});
}

}  // namespace

Frame evaluate_frame(const TransitionPlan& plan, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("frame time must lie in [0,1], got " + std::to_string(t));
  }
  Frame frame;
  frame.t = t;

  std::set<std::string> animated;
  for (const auto& track : plan.tracks()) {
    for (auto& id : track.container_ids()) animated.insert(std::move(id));
  }
  const Scene& source = plan.source();
  for (const auto& c : plan.containers()) {
    if (animated.contains(c.id)) continue;
    const auto stack = source.stack(c.id);
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

  for (const auto& track : plan.tracks()) {
    const double u = track.progress(t);
    std::visit(
        [&](const auto& p) {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, TransferPayload>) {
            emit_transfer(plan, p, u, frame);
          } else if constexpr (std::is_same_v<P, LevelPayload>) {
            emit_level(plan, p, u, frame);
          } else if constexpr (std::is_same_v<P, ShiftPayload>) {
            emit_shift(plan, p, u, frame);
          } else {
            emit_reshape(plan, p, u, frame);
          }
        },
        track.payload);
  }
  return frame;
}

std::vector<Frame> sample_frames(const TransitionPlan& plan, std::size_t n_frames) {
  if (n_frames < 2) {
    throw DomainError("need at least two frames, got " + std::to_string(n_frames));
  }
  std::vector<Frame> frames;
  frames.reserve(n_frames);
  const double last = static_cast<double>(n_frames - 1);
  for (std::size_t i = 0; i < n_frames; ++i) {
    // Pin the final sample so the last frame lands at t = 1 exactly.
    const double t = i + 1 == n_frames ? 1.0 : static_cast<double>(i) / last;
    frames.push_back(evaluate_frame(plan, t));
  }
  return frames;
}

}  // namespace aquanim
