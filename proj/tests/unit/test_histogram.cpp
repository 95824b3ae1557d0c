#include <doctest.h>

#include <algorithm>

#include "aquanim/core/errors.hpp"
#include "aquanim/scene/csv.hpp"
#include "aquanim/scene/histogram.hpp"
#include "support.hpp"

using namespace aquanim;
using aquanim::testing::Gen;

namespace {
// Membership by direct comparison against the edges.
std::vector<std::uint64_t> brute_counts(const std::vector<double>& data,
                                        const std::vector<double>& edges) {
  std::vector<std::uint64_t> counts(edges.size() - 1, 0);
  for (double v : data) {
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      const bool last = i + 2 == edges.size();
      if (v >= edges[i] && (v < edges[i + 1] || (last && v == edges[i + 1]))) {
        ++counts[i];
        break;
      }
    }
  }
  return counts;
}
}  // namespace

TEST_CASE("bin examples") {
  const std::vector<double> data{0.0, 0.5, 1.5, 1.5};
  const auto h = bin(data, 2, BinRange{0.0, 2.0});
  CHECK(h.edges == std::vector<double>{0, 1, 2});
  CHECK(h.counts == std::vector<std::uint64_t>{2, 2});

  const auto d = bin(data, 2);
  CHECK(d.edges.front() == 0.0);
  CHECK(d.edges.back() == 1.5);
  CHECK(d.counts == std::vector<std::uint64_t>{2, 2});

  const auto single = bin(std::vector<double>{5.0}, 3);
  CHECK(single.edges.front() == 4.5);
  CHECK(single.edges.back() == 5.5);
  CHECK(single.counts == std::vector<std::uint64_t>{0, 1, 0});

  const std::vector<double> many{3, 1, 4, 1, 5, 9, 2, 6};
  CHECK(bin(many, 1).counts == std::vector<std::uint64_t>{8});
}

TEST_CASE("bins are half-open except the last") {
  const std::vector<double> data{0.0, 1.0, 2.0};
  CHECK(bin(data, 2, BinRange{0, 2}).counts == std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("bin errors") {
  CHECK_THROWS_AS(bin(std::vector<double>{}, 3), DomainError);
  CHECK_THROWS_AS(bin(std::vector<double>{1.0}, 0), DomainError);
  CHECK_THROWS_AS(bin(std::vector<double>{1.0}, 2, BinRange{1, 1}), DomainError);
  try {
    bin(std::vector<double>{0.5, 7.25}, 2, BinRange{0, 2});
    FAIL("expected an ingestion error");
  } catch (const IngestionError& e) {
    CHECK(std::string(e.what()).find("7.25") != std::string::npos);
  }
}

TEST_CASE("property: counts match brute force and ignore input order") {
  Gen g(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto data = g.samples(g.index(1, 300), g.coin());
    // Land some samples exactly on edges.
    const auto k = g.index(1, 32);
    const auto r = data_range(data);
    const auto h = bin(data, k);
    for (int extra = 0; extra < 5; ++extra) data.push_back(h.edges[g.index(0, k)]);
    const auto full = bin(data, k, r);
    CHECK(full.counts == brute_counts(data, full.edges));
    std::shuffle(data.begin(), data.end(), g.engine());
    CHECK(bin(data, k, r).counts == full.counts);
  }
}

TEST_CASE("histogram_to_scene under density") {
  Histogram h{{0, 1, 2}, {2, 2}, Normalization::Density};
  const auto s = histogram_to_scene(h);
  REQUIRE(s.containers().size() == 2);
  REQUIRE(s.segments().size() == 2);
  CHECK(s.containers()[0].width == 1.0);
  CHECK(s.segments()[0].area == 0.5);
  CHECK(s.segments()[1].area == 0.5);
  CHECK(s.segment_height(s.segments()[1]) == 0.5);
  CHECK(s.total_area() == 1.0);

  Histogram sparse{{0, 0.5, 1}, {0, 4}, Normalization::Density};
  const auto t = histogram_to_scene(sparse);
  CHECK(t.containers().size() == 2);
  REQUIRE(t.segments().size() == 1);
  CHECK(t.segments()[0].area == 1.0);
  CHECK(t.segment_height(t.segments()[0]) == 2.0);

  Histogram empty{{0, 1, 2}, {0, 0}, Normalization::Density};
  CHECK_THROWS_AS(histogram_to_scene(empty), DomainError);
}

TEST_CASE("count normalization gives bar height = count") {
  Histogram h{{0, 2, 4}, {3, 1}, Normalization::Count};
  const auto s = histogram_to_scene(h);
  CHECK(s.segment_height(s.segments()[0]) == 3.0);
  CHECK(s.total_area() == 8.0);
}

TEST_CASE("property: density scenes hold unit area for any bin count") {
  Gen g(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto data = g.samples(g.index(1, 500), g.coin());
    const auto r = data_range(data);
    const auto m = g.index(1, 32), n = g.index(1, 32);
    const double sm = histogram_to_scene(bin(data, m, r)).total_area();
    const double sn = histogram_to_scene(bin(data, n, r)).total_area();
    CHECK(std::abs(sm - 1.0) <= 1e-12);
    CHECK(std::abs(sn - sm) <= 1e-12);
  }
}

TEST_CASE("csv ingestion") {
  CHECK(parse_csv_values("1\n2.5\n-3e2\n") == std::vector<double>{1, 2.5, -300});
  CHECK(parse_csv_values("value\r\n1\r\n\r\n2\r\n") == std::vector<double>{1, 2});
  CHECK(parse_csv_values("") == std::vector<double>{});
  CHECK(parse_csv_values("+4") == std::vector<double>{4});
  try {
    parse_csv_values("x\n1\nfoo\n");
    FAIL("expected an ingestion error");
  } catch (const IngestionError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_csv_values("1\n1,000\n"), IngestionError);
  CHECK_THROWS_AS(parse_csv_values("1\ninf\n"), IngestionError);
}
