#pragma once

#include <span>

#include "aquanim/core/conservation.hpp"
#include "aquanim/plan/plan.hpp"

namespace aquanim {

// Samples the plan and checks that the summed rect area of every frame stays
// at its initial value. Also checks the level series of each Transfer track
// and the per-segment area of Shift tracks. Failures are reported, not thrown.
InvariantReport verify_plan(const TransitionPlan& plan, std::size_t n_frames = 60,
                            double tol = kPlanTolerance);

// Same total-area check on an already sampled frame stream (e.g. a frames
// file read back from disk). Throws DomainError on fewer than two frames.
InvariantReport check_frames(std::span<const Frame> frames, double tol = kPlanTolerance);

}  // namespace aquanim
