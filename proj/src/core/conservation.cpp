#include "aquanim/core/conservation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "aquanim/core/errors.hpp"

namespace aquanim {

InvariantReport check_conservation(std::span<const double> widths,
                                   std::span<const std::vector<double>> series,
                                   double tol) {
  if (series.size() < 2) {
    throw DomainError("conservation check needs at least two samples, got " +
                      std::to_string(series.size()));
  }
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series[i].size() != widths.size()) {
      throw ShapeError("sample " + std::to_string(i) + " has " +
                       std::to_string(series[i].size()) + " levels for " +
                       std::to_string(widths.size()) + " containers");
    }
  }

  auto total = [&](const std::vector<double>& levels) {
    double s = 0.0;
    for (std::size_t k = 0; k < widths.size(); ++k) s += widths[k] * levels[k];
    return s;
  };

  InvariantReport report;
  report.tolerance = tol;
  report.frames_checked = series.size();
  const double s0 = total(series.front());
  const double scale = s0 != 0.0 ? std::abs(s0) : 1.0;

  for (std::size_t i = 0; i < series.size(); ++i) {
    const double dev = std::abs(total(series[i]) - s0) / scale;
    if (dev > report.max_total_deviation) {
      report.max_total_deviation = dev;
      report.worst_frame = i;
    }
    if (i + 1 < series.size()) {
      double step = 0.0;
      for (std::size_t k = 0; k < widths.size(); ++k) {
        step += widths[k] * (series[i + 1][k] - series[i][k]);
      }
      report.max_step_deviation =
          std::max(report.max_step_deviation, std::abs(step) / scale);
    }
  }
  report.passed = report.max_total_deviation <= tol &&
                  report.max_step_deviation <= tol;
  return report;
}

}  // namespace aquanim

namespace aquanim {

std::string format_report(const InvariantReport& report) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "conservation: %s\n"
                "  frames checked:          %zu\n"
                "  max total deviation:     %.6e\n"
                "  max step deviation:      %.6e\n"
                "  max segment deviation:   %.6e\n"
                "  worst frame:             %zu\n"
                "  tolerance:               %.3e\n",
                report.passed ? "PASS" : "FAIL", report.frames_checked,
                report.max_total_deviation, report.max_step_deviation,
                report.max_segment_deviation, report.worst_frame, report.tolerance);
  return buf;
}

}  // namespace aquanim
