#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace aquanim {

// A bar or tile. Its outline carries no data; the liquid inside does.
// Model space is y-up: baseline_y is the bottom edge.
struct Container {
  std::string id;
  double x = 0.0;
  double width = 1.0;
  double baseline_y = 0.0;

  friend bool operator==(const Container&, const Container&) = default;
};

// A colored, identity-carrying amount of liquid. Its height inside a
// container is area / container width.
struct LiquidSegment {
  std::string id;
  std::string color_key;
  double area = 0.0;
  std::string container_id;
  std::size_t stack_index = 0;

  friend bool operator==(const LiquidSegment&, const LiquidSegment&) = default;
};

// Chart state at one instant. Immutable once constructed.
class Scene {
 public:
  Scene() = default;
  // Throws InvariantError on duplicate ids, dangling container references,
  // stack index gaps or collisions, and non-positive widths or areas.
  Scene(std::vector<Container> containers, std::vector<LiquidSegment> segments);

  const std::vector<Container>& containers() const noexcept {
    return containers_;
  }
  const std::vector<LiquidSegment>& segments() const noexcept {
    return segments_;
  }
  double total_area() const noexcept { return total_area_; }

  const Container* find_container(const std::string& id) const;
  const LiquidSegment* find_segment(const std::string& id) const;

  // Segments of one container ordered bottom first.
  std::vector<const LiquidSegment*> stack(const std::string& container_id) const;

  double segment_height(const LiquidSegment& segment) const;
  // Ordinate of the bottom edge of a segment, baseline included.
  double segment_bottom(const LiquidSegment& segment) const;

  friend bool operator==(const Scene& a, const Scene& b) {
    return a.containers_ == b.containers_ && a.segments_ == b.segments_;
  }

 private:
  std::vector<Container> containers_;
  std::vector<LiquidSegment> segments_;
  double total_area_ = 0.0;
};

}  // namespace aquanim
