#include "aquanim/scene/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aquanim/core/errors.hpp"

namespace aquanim {

std::uint64_t Histogram::total_count() const noexcept {
  std::uint64_t n = 0;
  for (auto c : counts) n += c;
  return n;
}

double Histogram::bin_area(std::size_t i) const {
  const auto c = static_cast<double>(counts.at(i));
  if (normalization == Normalization::Count) return c * bin_width(i);
  const auto n = total_count();
  if (n == 0) {
    throw DomainError("total count is zero; histogram cannot be density-normalized");
  }
  return c / static_cast<double>(n);
}

BinRange data_range(std::span<const double> data) {
  if (data.empty()) throw DomainError("cannot bin an empty data set");
  double lo = data.front();
  double hi = data.front();
  for (double v : data) {
    if (!std::isfinite(v)) throw DomainError("data contains a non-finite value");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (lo == hi) return {lo - 0.5, hi + 0.5};
  return {lo, hi};
}

Histogram bin(std::span<const double> data, std::size_t k,
              std::optional<BinRange> range, Normalization normalization) {
  if (data.empty()) throw DomainError("cannot bin an empty data set");
  if (k == 0) throw DomainError("bin count must be at least 1");
  const bool explicit_range = range.has_value();
  const BinRange r = explicit_range ? *range : data_range(data);
  if (!(r.lo < r.hi) || !std::isfinite(r.lo) || !std::isfinite(r.hi)) {
    throw DomainError("bin range must satisfy lo < hi");
  }

  Histogram h;
  h.normalization = normalization;
  h.edges.resize(k + 1);
  const double span = r.hi - r.lo;
  for (std::size_t i = 0; i <= k; ++i) {
    h.edges[i] = r.lo + span * static_cast<double>(i) / static_cast<double>(k);
  }
  h.edges[k] = r.hi;
  h.counts.assign(k, 0);

  for (double v : data) {
    if (!std::isfinite(v)) throw DomainError("data contains a non-finite value");
    if (v < r.lo || v > r.hi) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "value " << v << " lies outside the bin range [" << r.lo << ", "
          << r.hi << "]";
      throw IngestionError(msg.str());
    }
    auto idx = static_cast<std::size_t>(std::floor((v - r.lo) / span *
                                                   static_cast<double>(k)));
    idx = std::min(idx, k - 1);
    // Settle rounding at the edges against the stored edge values.
    while (idx > 0 && v < h.edges[idx]) --idx;
    while (idx + 1 < k && v >= h.edges[idx + 1]) ++idx;
    ++h.counts[idx];
  }
  return h;
}

Scene histogram_to_scene(const Histogram& h, const HistogramSceneNames& names) {
  if (h.edges.size() != h.counts.size() + 1) {
    throw ShapeError("histogram needs exactly one more edge than bins");
  }
  if (h.normalization == Normalization::Density && h.total_count() == 0) {
    throw DomainError("total count is zero; histogram cannot be density-normalized");
  }
  std::vector<Container> containers;
  std::vector<LiquidSegment> segments;
  containers.reserve(h.bin_count());
  for (std::size_t i = 0; i < h.bin_count(); ++i) {
    const std::string id = names.prefix + std::to_string(i);
    containers.push_back({id, h.edges[i], h.bin_width(i), 0.0});
    if (h.counts[i] > 0) {
      segments.push_back({id + names.segment_suffix, names.color_key,
                          h.bin_area(i), id, 0});
    }
  }
  return Scene(std::move(containers), std::move(segments));
}

}  // namespace aquanim
