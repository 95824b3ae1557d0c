#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aquanim/scene/scene.hpp"

namespace aquanim {

enum class Normalization { Density, Count };

struct BinRange {
  double lo;
  double hi;
};

// Equal-width histogram. Bins are half-open [e_i, e_{i+1}) except the last,
// which is closed.
struct Histogram {
  std::vector<double> edges;
  std::vector<std::uint64_t> counts;
  Normalization normalization = Normalization::Density;

  std::size_t bin_count() const noexcept { return counts.size(); }
  std::uint64_t total_count() const noexcept;
  double bin_width(std::size_t i) const { return edges.at(i + 1) - edges.at(i); }
  // Area of bin i: count / total under Density, count * width under Count.
  double bin_area(std::size_t i) const;
};

// Range used when none is given: data min/max, widened to +-0.5 around a
// single repeated value. Throws DomainError on empty or non-finite data.
BinRange data_range(std::span<const double> data);

// Throws DomainError on empty data, k = 0 or lo >= hi, and IngestionError
// when a value falls outside an explicit range.
Histogram bin(std::span<const double> data, std::size_t k,
              std::optional<BinRange> range = std::nullopt,
              Normalization normalization = Normalization::Density);

struct HistogramSceneNames {
  // Container i is "<prefix><i>", its segment "<prefix><i><segment_suffix>".
  std::string prefix = "bin";
  std::string segment_suffix = ".liquid";
  std::string color_key = "density";
};

// One container per bin sitting on y = 0, one segment per non-empty bin.
// Throws DomainError when a Density histogram has no counts at all.
Scene histogram_to_scene(const Histogram& h, const HistogramSceneNames& names = {});

}  // namespace aquanim
