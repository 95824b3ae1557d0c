#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aquanim/plan/plan.hpp"
#include "aquanim/scene/histogram.hpp"

namespace aquanim {

struct RebinOptions {
  Easing easing = Easing::Smoothstep;
  // Shared by both bin counts; defaults to the data range.
  std::optional<BinRange> range;
};

// Density histograms with m and n bins over the same range, joined by one
// Transfer track: source bins drain while target bins fill. Target containers
// are listed first so they draw behind the source ones.
// Source containers are "src<i>", target containers "dst<i>". When m == n the
// plan is the identity on the m-bin scene.
TransitionPlan plan_rebin(std::span<const double> data, std::size_t m, std::size_t n,
                          const RebinOptions& options = {});

// Moves each selected segment to the bottom of its container; the others keep
// their relative order above it. One Shift track per container that changes.
// Throws ParameterError for unknown ids or two selections in one container.
TransitionPlan plan_align(const Scene& source, const std::vector<std::string>& selected,
                          Easing easing = Easing::Smoothstep);

// Changes the width of a single-segment container while keeping its area.
// Throws ParameterError for an unknown container, DomainError for a
// non-positive width and UnsupportedError for multi-segment containers.
TransitionPlan plan_reshape(const Scene& source, const std::string& container_id,
                            double new_width, Anchor anchor = Anchor::BottomLeft,
                            Easing easing = Easing::Smoothstep);

// Area-changing level change of a single-segment container. The plan is
// flagged non-conserving.
TransitionPlan plan_fill(const Scene& source, const std::string& container_id,
                         double new_level, Easing easing = Easing::Smoothstep);

}  // namespace aquanim
