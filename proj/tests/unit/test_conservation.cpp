#include <doctest.h>

#include "aquanim/core/conservation.hpp"
#include "aquanim/core/easing.hpp"
#include "aquanim/core/errors.hpp"
#include "aquanim/core/kinematics.hpp"
#include "support.hpp"

using namespace aquanim;

namespace {
std::vector<std::vector<double>> sampled(const LevelState& a, const LevelState& b, int n) {
  std::vector<std::vector<double>> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(interpolate_levels(a, b, ease(Easing::Smoothstep, i / double(n - 1))).levels());
  }
  return out;
}
}  // namespace

TEST_CASE("interpolated series passes") {
  const LevelState a({1, 2}, {4, 1}), b({1, 2}, {2, 2});
  const auto series = sampled(a, b, 60);
  const auto r = check_conservation(a.widths(), series, 1e-9);
  CHECK(r.passed);
  CHECK(r.frames_checked == 60);
  CHECK(r.max_total_deviation <= 1e-9);
  CHECK(r.max_step_deviation <= 1e-9);
}

TEST_CASE("perturbed frame fails with the expected deviation") {
  const LevelState a({1, 2}, {4, 1}), b({1, 2}, {2, 2});
  auto series = sampled(a, b, 60);
  series[17][0] += 0.1;  // width-1 container, S = 6
  const auto r = check_conservation(a.widths(), series, 1e-9);
  CHECK_FALSE(r.passed);
  CHECK(r.worst_frame == 17);
  CHECK(r.max_total_deviation == doctest::Approx(0.1 / 6.0).epsilon(1e-9));
  CHECK(r.max_step_deviation == doctest::Approx(0.1 / 6.0).epsilon(1e-9));
}

TEST_CASE("constant series passes with zero deviation") {
  const std::vector<double> w{1, 3};
  const std::vector<std::vector<double>> series(5, {2.0, 0.5});
  const auto r = check_conservation(w, series);
  CHECK(r.passed);
  CHECK(r.max_total_deviation == 0.0);
  CHECK(r.max_step_deviation == 0.0);
}

TEST_CASE("conservation check input errors") {
  const std::vector<double> w{1};
  CHECK_THROWS_AS(check_conservation(w, std::vector<std::vector<double>>{}), DomainError);
  CHECK_THROWS_AS(check_conservation(w, std::vector<std::vector<double>>{{1.0}}), DomainError);
  CHECK_THROWS_AS(check_conservation(w, std::vector<std::vector<double>>{{1.0}, {1.0, 2.0}}),
                  ShapeError);
}

TEST_CASE("property: differential law holds on random transfers") {
  aquanim::testing::Gen g(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = g.index(2, 30);
    std::vector<double> w(n), l0(n), l1(n);
    double s0 = 0, s1 = 0;
    for (std::size_t k = 0; k < n; ++k) {
      w[k] = g.uniform(0.1, 3.0);
      l0[k] = g.uniform(0, 5);
      l1[k] = g.uniform(0, 5);
      s0 += w[k] * l0[k];
      s1 += w[k] * l1[k];
    }
    for (auto& v : l1) v *= s0 / s1;
    const auto r = check_conservation(w, sampled(LevelState(w, l0), LevelState(w, l1), 60));
    CHECK(r.passed);
  }
}

TEST_CASE("report text") {
  InvariantReport r;
  r.passed = false;
  r.frames_checked = 3;
  const auto text = format_report(r);
  CHECK(text.starts_with("conservation: FAIL"));
  CHECK(text.find("frames checked:          3") != std::string::npos);
}
