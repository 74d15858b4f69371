#include <doctest.h>

#include <cmath>
#include <random>

#include "climbdesign/actuation.hpp"
#include "climbdesign/errors.hpp"
#include "climbdesign/oracle.hpp"
#include "climbdesign/quadrature.hpp"
#include "test_fixtures.hpp"

using namespace climbdesign;
using climbdesign::testing::reference_params;

TEST_CASE("drive torque at the reference mass") {
  const RobotParams p = reference_params();
  const DriveRequirement req = required_drive_torque(p, 6.822);
  CHECK(req.tau_m == doctest::Approx(3.53979936).epsilon(1e-12));
  CHECK(req.f_dr == doctest::Approx(73.74582).epsilon(1e-12));
  // F_dr = G_dr * tau_m / r_w by construction
  CHECK(req.f_dr == doctest::Approx(p.G_dr * req.tau_m / p.r_w).epsilon(1e-13));
}

TEST_CASE("drive torque cancels in free fall") {
  RobotParams p = reference_params();
  p.a_d = -p.g;
  const DriveRequirement req = required_drive_torque(p, 6.822);
  CHECK(req.tau_m == doctest::Approx(0.0));
  CHECK(req.f_dr == doctest::Approx(0.0));
}

TEST_CASE("drive torque is linear in mass and net acceleration") {
  std::mt19937_64 rng(46);
  std::uniform_real_distribution<double> mass(0.5, 50.0);
  std::uniform_real_distribution<double> factor(1.1, 7.0);
  std::uniform_real_distribution<double> accel(0.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    RobotParams p = reference_params();
    p.a_d = accel(rng);
    const double m = mass(rng);
    const double s = factor(rng);
    const double base = required_drive_torque(p, m).tau_m;
    CHECK(required_drive_torque(p, s * m).tau_m ==
          doctest::Approx(s * base).epsilon(1e-12));

    // scale (a_d + g) jointly
    RobotParams q = p;
    q.a_d = s * (p.a_d + p.g) - p.g;
    CHECK(required_drive_torque(q, m).tau_m ==
          doctest::Approx(s * base).epsilon(1e-12));
  }
}

TEST_CASE("contact patch under the published preload") {
  const RobotParams p = reference_params();
  const ContactPatch patch = contact_patch(p, 249.6);
  CHECK(patch.h_w == doctest::Approx(0.011142857142857143).epsilon(1e-13));
  CHECK(patch.sigma_w == doctest::Approx(0.7e6).epsilon(1e-13));
  CHECK(patch.degenerate == false);
}

TEST_CASE("contact patch pressure always equals the rubber modulus") {
  const RobotParams p = reference_params();
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> load(1e-6, 2000.0);
  for (int i = 0; i < 200; ++i) {
    const ContactPatch patch = contact_patch(p, load(rng));
    CHECK(patch.sigma_w == doctest::Approx(p.E_rubber).epsilon(1e-12));
  }
}

TEST_CASE("zero preload degenerates the patch and the turret torque") {
  const RobotParams p = reference_params();
  const ContactPatch patch = contact_patch(p, 0.0);
  CHECK(patch.degenerate == true);
  CHECK(patch.h_w == 0.0);
  CHECK(turret_torque(p, 0.0) == 0.0);
}

TEST_CASE("patch integral scales with the cube of the patch") {
  std::mt19937_64 rng(48);
  std::uniform_real_distribution<double> dim(0.005, 0.06);
  std::uniform_real_distribution<double> factor(0.3, 4.0);
  for (int i = 0; i < 20; ++i) {
    const double lw = dim(rng), hw = dim(rng), s = factor(rng);
    const double base = patch_radial_integral(lw, hw);
    const double scaled = patch_radial_integral(s * lw, s * hw);
    CHECK(scaled == doctest::Approx(s * s * s * base).epsilon(1e-8));
  }
}

TEST_CASE("patch integral agrees with the antiderivative route") {
  CHECK(patch_radial_integral(2.0, 2.0) ==
        doctest::Approx(3.0607828658568508).epsilon(1e-9));
  std::mt19937_64 rng(49);
  std::uniform_real_distribution<double> dim(0.002, 0.08);
  for (int i = 0; i < 25; ++i) {
    const double lw = dim(rng), hw = dim(rng);
    CHECK(patch_radial_integral(lw, hw) ==
          doctest::Approx(rect_integral_closed_form(lw, hw)).epsilon(1e-8));
  }
}

TEST_CASE("turret torque grows with wheel preload") {
  const RobotParams p = reference_params();
  double prev = 0.0;
  for (double n_w = 0.0; n_w <= 500.0; n_w += 25.0) {
    const double tau = turret_torque(p, n_w);
    CHECK(tau >= prev);
    prev = tau;
  }
}

TEST_CASE("motor margins") {
  CHECK(motor_margin(4.057, {"drive", 6.865, 41.0}).margin ==
        doctest::Approx(2.808).epsilon(1e-12));
  CHECK(motor_margin(4.057, {"drive", 6.865, 41.0}).pass == true);
  CHECK(motor_margin(0.829, {"turret", 1.863, 7.0}).margin ==
        doctest::Approx(1.034).epsilon(1e-12));
  CHECK(motor_margin(0.829, {"turret", 1.863, 7.0}).pass == true);

  SUBCASE("exact rating passes inclusively") {
    const MotorMargin m = motor_margin(1.5, {"m", 1.5, 10.0});
    CHECK(m.margin == doctest::Approx(0.0));
    CHECK(m.pass == true);
  }
  SUBCASE("negative requirement is rejected") {
    CHECK_THROWS_AS(motor_margin(-0.1, {"m", 1.0, 1.0}), InvalidParameter);
  }
}

TEST_CASE("the combined actuation report is consistent with its parts") {
  const RobotParams p = reference_params();
  const ColumnSpec col{.d_c = 0.090};
  const ActuationReport r = actuation_report(p, col, 6.822, 249.6);
  CHECK(r.tau_m == doctest::Approx(3.53979936).epsilon(1e-12));
  CHECK(r.f_dr == doctest::Approx(73.74582).epsilon(1e-12));
  CHECK(r.sigma_w == doctest::Approx(p.E_rubber).epsilon(1e-12));
  CHECK(r.h_w == doctest::Approx(0.011142857142857143).epsilon(1e-12));
  CHECK(r.tau_turret == doctest::Approx(turret_torque(p, col, 249.6)));
  CHECK(r.tau_m >= 0.0);
  CHECK(r.f_dr >= 0.0);
  CHECK(r.h_w >= 0.0);
  CHECK(r.tau_turret >= 0.0);
}

TEST_CASE("rated speed maps to a rim speed") {
  const RobotParams p = reference_params();
  // 41 RPM on a 36 mm wheel: 41 * 2*pi * 0.036 / 60
  CHECK(climb_speed_estimate(p, 41.0) ==
        doctest::Approx(0.154566358).epsilon(1e-6));
}
