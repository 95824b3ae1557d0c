#pragma once

#include <map>
#include <string>
#include <vector>

namespace aquanim {

// Liquid levels in a group of connected fixed-width containers.
class LevelState {
 public:
  LevelState() = default;
  // Throws ShapeError on length mismatch, DomainError on non-positive widths,
  // negative levels or a non-finite total.
  LevelState(std::vector<double> widths, std::vector<double> levels);

  const std::vector<double>& widths() const noexcept { return widths_; }
  const std::vector<double>& levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return widths_.size(); }

  // Sum of width * level over the group.
  double total_area() const noexcept;

  friend bool operator==(const LevelState&, const LevelState&) = default;

 private:
  std::vector<double> widths_;
  std::vector<double> levels_;
};

// Lerps every level with the same progress u. When both endpoints hold the
// same total area, so does every intermediate state.
// Throws ShapeError if the width vectors differ and ConservationError if the
// endpoint areas differ by more than the plan tolerance.
LevelState interpolate_levels(const LevelState& start, const LevelState& end,
                              double u);

enum class Anchor { BottomLeft, BottomRight, BottomCenter };

// A single rectangle of liquid changing its width while keeping its area.
class ReshapeSpec {
 public:
  ReshapeSpec(double w0, double h0, double w1, double h1,
              Anchor anchor = Anchor::BottomLeft);
  // Builds the spec from the area and both widths; heights follow.
  static ReshapeSpec from_area(double area, double w0, double w1,
                               Anchor anchor = Anchor::BottomLeft);

  double w0() const noexcept { return w0_; }
  double h0() const noexcept { return h0_; }
  double w1() const noexcept { return w1_; }
  double h1() const noexcept { return h1_; }
  Anchor anchor() const noexcept { return anchor_; }
  double area() const noexcept { return w0_ * h0_; }

 private:
  double w0_, h0_, w1_, h1_;
  Anchor anchor_;
};

struct Extent {
  double width;
  double height;
};

// Width lerps linearly in u; height is slaved to area / width.
Extent reshape_at(const ReshapeSpec& spec, double u);

// Area obtained by lerping the rectangle vertices directly. Not area
// preserving; kept as the counterexample to reshape_at.
double naive_vertex_lerp_area(const ReshapeSpec& spec, double u);

// Ordered stack of segments in one container, bottom first.
class StackState {
 public:
  StackState(double container_width, std::vector<double> segment_heights,
             std::vector<std::string> segment_ids);

  double container_width() const noexcept { return container_width_; }
  const std::vector<double>& heights() const noexcept { return heights_; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

  // Prefix sums of heights, starting at 0.
  std::vector<double> bottoms() const;
  double total_height() const noexcept;

 private:
  double container_width_;
  std::vector<double> heights_;
  std::vector<std::string> ids_;
};

// Bottom of every segment while the stack is reordered from `start_order` to
// `end_order`. Heights never change, only positions.
// Throws ConservationError if the orders disagree on ids, heights or width.
std::map<std::string, double> shift_bottoms(const StackState& start_order,
                                            const StackState& end_order,
                                            double u);

}  // namespace aquanim
