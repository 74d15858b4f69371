#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "climbdesign/errors.hpp"
#include "climbdesign/geometry.hpp"
#include "test_fixtures.hpp"

using namespace climbdesign;
using climbdesign::testing::reference_params;

namespace {
constexpr double kPi = std::numbers::pi;
const ColumnSpec kColumn90{.d_c = 0.090};
}  // namespace

TEST_CASE("link angle at the reference geometry") {
  const RobotParams p = reference_params();
  // l = 65 mm, w_b = 20 mm, d_c = 90 mm gives alpha = 2*atan(1/2), whose
  // sine/cosine are exactly 0.8 / 0.6.
  const double alpha = link_angle(p, kColumn90);
  CHECK(alpha == doctest::Approx(0.9272952180016122).epsilon(1e-13));
  CHECK(std::sin(alpha) == doctest::Approx(0.8).epsilon(1e-13));
  CHECK(std::cos(alpha) == doctest::Approx(0.6).epsilon(1e-13));
}

TEST_CASE("link angle limits") {
  RobotParams p = reference_params();

  SUBCASE("arctan identity at l = 2*w_b + d_c") {
    p.l = 0.130;
    CHECK(link_angle(p, kColumn90) == doctest::Approx(kPi / 2).epsilon(1e-13));
  }
  SUBCASE("vanishes for very wide columns") {
    const ColumnSpec wide{.d_c = 1000.0};  // 1e6 mm
    const double alpha = link_angle(p, wide);
    CHECK(alpha > 0.0);
    CHECK(alpha < 1.5e-4);
  }
  SUBCASE("rejects invalid diameter") {
    CHECK_THROWS_AS(link_angle(p, ColumnSpec{.d_c = 0.0}), InvalidParameter);
    CHECK_THROWS_AS(link_angle(p, ColumnSpec{.d_c = -0.1}), InvalidParameter);
  }
}

TEST_CASE("link angle is strictly decreasing and stays in (0, pi)") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> len(0.02, 0.15);
  std::uniform_real_distribution<double> dia(0.03, 0.8);
  for (int i = 0; i < 300; ++i) {
    const double l = len(rng);
    const double w_b = 0.3 * len(rng);
    const double d1 = dia(rng);
    const double d2 = d1 + dia(rng) * 0.1 + 1e-6;
    const double a1 = link_angle_raw(l, w_b, d1);
    const double a2 = link_angle_raw(l, w_b, d2);
    CHECK(a1 > 0.0);
    CHECK(a1 < kPi);
    CHECK(a2 < a1);
  }
}

TEST_CASE("latch clearance at the reference geometry") {
  const RobotParams p = reference_params();
  CHECK(latch_clearance(p, kColumn90, 2) ==
        doctest::Approx(-0.023720).epsilon(1e-10));
  CHECK(latch_clearance(p, kColumn90, 3) ==
        doctest::Approx(0.026136).epsilon(1e-10));
}

TEST_CASE("latch clearance kernel reduces to the half-link term") {
  // With no latch offset, no standoff, no column and a single link only the
  // (l/2)*sin(alpha) term survives.
  for (double alpha : {0.3, 1.0, kPi / 2, 2.5}) {
    CHECK(latch_clearance_raw(0.065, 0.0, 0.0, 0.0, alpha, 1) ==
          doctest::Approx(0.0325 * std::sin(alpha)).epsilon(1e-13));
  }
}

TEST_CASE("latch clearance grows with every link while the wrap stays open") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> len(0.03, 0.12);
  std::uniform_real_distribution<double> dia(0.05, 0.5);
  for (int i = 0; i < 300; ++i) {
    const double l = len(rng);
    const double w_latch = 0.2 * len(rng);
    const double w_b = 0.3 * len(rng);
    const double d_c = dia(rng);
    const double alpha = link_angle_raw(l, w_b, d_c);
    for (int n = 1; (n + 1) * alpha <= kPi; ++n) {
      const double shorter = latch_clearance_raw(l, w_latch, w_b, d_c, alpha, n);
      const double longer =
          latch_clearance_raw(l, w_latch, w_b, d_c, alpha, n + 1);
      CHECK(longer > shorter);
    }
  }
}

TEST_CASE("links_for_diameter picks the smallest sufficient arm") {
  const RobotParams p = reference_params();
  const ArmConfiguration arm = links_for_diameter(p, kColumn90);
  CHECK(arm.n == 3);
  CHECK(arm.alpha == doctest::Approx(0.9272952180016122).epsilon(1e-13));
  CHECK(arm.d_latch == doctest::Approx(0.026136).epsilon(1e-10));
  CHECK(arm.wrap_angle == doctest::Approx(3 * 0.9272952180016122).epsilon(1e-13));
  CHECK(arm.wrap_ok == true);
}

TEST_CASE("links_for_diameter edge behavior") {
  RobotParams p = reference_params();

  SUBCASE("an always-met clearance floor accepts the minimum arm") {
    p.c_latch_min = -1e9;
    CHECK(links_for_diameter(p, kColumn90).n == p.n_min);
  }
  SUBCASE("an unreachable clearance floor exhausts the search") {
    p.c_latch_min = 1.0;  // a meter of clearance can never appear
    CHECK_THROWS_AS(links_for_diameter(p, kColumn90), NoSolution);
  }
  SUBCASE("wrap past the far side is returned but flagged") {
    const ArmConfiguration arm = links_for_diameter(p, ColumnSpec{.d_c = 0.115});
    CHECK(arm.n == 4);
    CHECK(arm.wrap_angle > kPi);
    CHECK(arm.wrap_ok == false);
  }
}

TEST_CASE("links_for_diameter is non-decreasing across the full grid") {
  const RobotParams p = reference_params();
  int prev = 0;
  for (int mm = 60; mm <= 400; ++mm) {
    const int n = links_for_diameter(p, ColumnSpec{.d_c = mm * 1e-3}).n;
    CHECK(n >= prev);
    prev = n;
  }
}

TEST_CASE("component COM distances at the reference geometry") {
  const RobotParams p = reference_params();
  CHECK(link_com_distance(p, kColumn90, 3) ==
        doctest::Approx(0.021200).epsilon(1e-10));
  CHECK(end_com_distance(p, kColumn90, 3) ==
        doctest::Approx(0.100136).epsilon(1e-10));
  // Single link: the standard-link sum is empty.
  CHECK(link_com_distance(p, kColumn90, 1) == doctest::Approx(-p.r_w));
}

TEST_CASE("end COM minus latch clearance is w_b + d_c - r_w") {
  const RobotParams p = reference_params();
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> dia(0.05, 0.5);
  for (int i = 0; i < 200; ++i) {
    const ColumnSpec col{.d_c = dia(rng)};
    const int n = 1 + static_cast<int>(rng() % 8);
    const double gap = end_com_distance(p, col, n) - latch_clearance(p, col, n);
    CHECK(gap == doctest::Approx(p.w_b + col.d_c - p.r_w).epsilon(1e-12));
  }
}

TEST_CASE("COM moment arm at the reference configuration") {
  const RobotParams p = reference_params();
  const ComEstimate est = com_distance_d1(p, kColumn90, 3, 0);
  CHECK(est.total_mass == doctest::Approx(6.822).epsilon(1e-13));
  CHECK(est.d1 == doctest::Approx(0.1884542298446203).epsilon(1e-12));
  CHECK(est.moment < 0.0);  // tail-heavy: COM sits behind the wheel contact
}

TEST_CASE("COM moment arm is invariant under uniform mass scaling") {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> scale(0.1, 40.0);
  for (int i = 0; i < 100; ++i) {
    RobotParams p = reference_params();
    const double lambda = scale(rng);
    p.m_b *= lambda;
    p.m_t *= lambda;
    p.m_link *= lambda;
    p.m_end *= lambda;
    p.m_tw *= lambda;
    const int n = 2 + static_cast<int>(rng() % 6);
    const int k = static_cast<int>(rng() % 9);
    const double base = com_distance_d1(reference_params(), kColumn90, n, k).d1;
    const double scaled = com_distance_d1(p, kColumn90, n, k).d1;
    CHECK(scaled == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("tail weights push the COM rearward while the moment is negative") {
  const RobotParams p = reference_params();
  double prev = com_distance_d1(p, kColumn90, 3, 0).d1;
  for (int k = 1; k <= 8; ++k) {
    const ComEstimate est = com_distance_d1(p, kColumn90, 3, k);
    REQUIRE(est.moment < 0.0);
    CHECK(est.d1 > prev);
    prev = est.d1;
  }
}

TEST_CASE("com_distance_d1 validates its counts") {
  const RobotParams p = reference_params();
  CHECK_THROWS_AS(com_distance_d1(p, kColumn90, 1, 0), InvalidParameter);
  CHECK_THROWS_AS(com_distance_d1(p, kColumn90, 3, -1), InvalidParameter);
}
