#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aquanim/core/easing.hpp"
#include "aquanim/core/kinematics.hpp"
#include "aquanim/plan/frame.hpp"
#include "aquanim/scene/scene.hpp"

namespace aquanim {

enum class TrackKind { Fill, Empty, Transfer, Shift, Reshape };

std::string_view to_string(TrackKind kind);

// Level changes across a group of connected fixed-width containers. Each
// container holds at most one segment ("" when it holds none).
struct TransferPayload {
  std::vector<std::string> container_ids;
  std::vector<std::string> segment_ids;
  LevelState start;
  LevelState end;
};

// Single-container level change. Changes the area on its own.
struct LevelPayload {
  std::string container_id;
  std::string segment_id;
  double start_level = 0.0;
  double end_level = 0.0;
};

// Reordering of the segments stacked in one container.
struct ShiftPayload {
  std::string container_id;
  StackState start;
  StackState end;
  // Segments drawn after the rest so they stay visible while they move.
  std::vector<std::string> draw_last;
};

struct ReshapePayload {
  std::string container_id;
  std::string segment_id;
  ReshapeSpec spec;
};

using TrackPayload =
    std::variant<TransferPayload, LevelPayload, ShiftPayload, ReshapePayload>;

struct TimeWindow {
  double start = 0.0;
  double end = 1.0;
};

struct Track {
  TrackKind kind;
  TrackPayload payload;
  TimeWindow window{};
  Easing easing = Easing::Smoothstep;

  // Eased progress of this track at global time t in [0,1].
  double progress(double t) const;
  std::vector<std::string> container_ids() const;
};

// Staged list of tracks between two scenes.
class TransitionPlan {
 public:
  // Throws ParameterError for malformed tracks or containers that change
  // without a track, ConservationError when a conserving plan does not
  // conserve area.
  TransitionPlan(Scene source, Scene target, std::vector<Track> tracks,
                 bool conserving = true);

  const Scene& source() const noexcept { return source_; }
  const Scene& target() const noexcept { return target_; }
  const std::vector<Track>& tracks() const noexcept { return tracks_; }
  bool conserving() const noexcept { return conserving_; }

  // Segment ids the renderer should draw in the accent color.
  const std::vector<std::string>& highlight() const noexcept { return highlight_; }
  void set_highlight(std::vector<std::string> ids) { highlight_ = std::move(ids); }

  // Geometry of a container as it stands in the source scene, falling back to
  // the target scene for containers that only exist there.
  const Container& container(const std::string& id) const;
  const std::vector<Container>& containers() const noexcept { return containers_; }
  // Color of a segment from whichever endpoint holds it; "" for unknown ids.
  std::string color_of(const std::string& segment_id) const;

 private:
  void validate() const;

  Scene source_;
  Scene target_;
  std::vector<Track> tracks_;
  bool conserving_;
  std::vector<Container> containers_;
  std::vector<std::string> highlight_;
};

// Evaluates every track at global time t.
Frame evaluate_frame(const TransitionPlan& plan, double t);

// Frames at t_i = i / (n_frames - 1). Throws DomainError when n_frames < 2.
std::vector<Frame> sample_frames(const TransitionPlan& plan, std::size_t n_frames = 60);

}  // namespace aquanim
