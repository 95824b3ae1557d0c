#include "aquanim/plan/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace aquanim {

InvariantReport check_frames(std::span<const Frame> frames, double tol) {
  const std::vector<double> unit{1.0};
  std::vector<std::vector<double>> totals;
  totals.reserve(frames.size());
  for (const auto& f : frames) totals.push_back({f.total_area()});
  return check_conservation(unit, totals, tol);
}

InvariantReport verify_plan(const TransitionPlan& plan, std::size_t n_frames, double tol) {
  const auto frames = sample_frames(plan, n_frames);
  InvariantReport report = check_frames(frames, tol);
  const double s0 = frames.front().total_area();
  const double scale = s0 != 0.0 ? std::abs(s0) : 1.0;

  for (const auto& track : plan.tracks()) {
    if (const auto* p = std::get_if<TransferPayload>(&track.payload)) {
      std::vector<std::vector<double>> series;
      series.reserve(frames.size());
      for (const auto& f : frames) {
        series.push_back(interpolate_levels(p->start, p->end, track.progress(f.t)).levels());
      }
      const auto r = check_conservation(p->start.widths(), series, tol);
      report.max_step_deviation = std::max(report.max_step_deviation, r.max_step_deviation);
      report.max_total_deviation = std::max(report.max_total_deviation, r.max_total_deviation);
    } else if (const auto* p = std::get_if<ShiftPayload>(&track.payload)) {
      std::map<std::string, double> first;
      for (const auto& f : frames) {
        for (const auto& r : f.rects) {
          if (std::find(p->end.ids().begin(), p->end.ids().end(), r.segment_id) ==
              p->end.ids().end()) {
            continue;
          }
          auto [it, inserted] = first.emplace(r.segment_id, r.area());
          if (!inserted) {
            report.max_segment_deviation = std::max(
                report.max_segment_deviation, std::abs(r.area() - it->second) / scale);
          }
        }
      }
    }
  }
  report.passed = report.max_total_deviation <= tol && report.max_step_deviation <= tol &&
                  report.max_segment_deviation <= tol;
  return report;
}

}  // namespace aquanim
