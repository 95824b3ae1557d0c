#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "aquanim/core/tolerance.hpp"

namespace aquanim {

// Per-series conservation diagnostics. Deviations are relative to the
// initial total area S(t0).
struct InvariantReport {
  bool passed = true;
  double tolerance = kPlanTolerance;
  // max_i |S(t_i) - S(t_0)| / S(t_0)
  double max_total_deviation = 0.0;
  // max_i |sum_k w_k (L_k(t_{i+1}) - L_k(t_i))| / S(t_0)
  double max_step_deviation = 0.0;
  // Largest relative change of any single segment's area across frames.
  // Only populated by plan verification.
  double max_segment_deviation = 0.0;
  // Index of the frame carrying the largest total deviation.
  std::size_t worst_frame = 0;
  std::size_t frames_checked = 0;
};

// Checks that a sampled series of levels keeps the total area constant and
// that consecutive frames satisfy sum_k w_k dL_k = 0.
// Throws DomainError on an empty (or single-sample) series and ShapeError when
// a sample does not match the width vector.
InvariantReport check_conservation(std::span<const double> widths,
                                   std::span<const std::vector<double>> series,
                                   double tol = kPlanTolerance);

}  // namespace aquanim

namespace aquanim {

// Multi-line human readable summary, starting with "conservation: PASS|FAIL".
std::string format_report(const InvariantReport& report);

}  // namespace aquanim
