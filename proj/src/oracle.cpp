#include "climbdesign/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "climbdesign/errors.hpp"
#include "climbdesign/geometry.hpp"
#include "climbdesign/quadrature.hpp"
#include "climbdesign/statics.hpp"

namespace climbdesign {

namespace {

constexpr double kPi = std::numbers::pi;

// splitmix64: platform-independent draws, unlike <random> distributions.
struct SplitMix {
  std::uint64_t state;
  std::uint64_t next_bits() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(next_bits() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_bits() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

// Bracketed bisection driven to the last representable midpoint, so the root
// is exact to the ulp for the (linear) residuals below.
bool bisect(const std::function<double(double)>& f, double a, double b,
            double& root) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) { root = a; return true; }
  if (fb == 0.0) { root = b; return true; }
  if ((fa > 0.0) == (fb > 0.0)) return false;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (a + b);
    if (mid == a || mid == b) break;
    const double fm = f(mid);
    if (fm == 0.0) { root = mid; return true; }
    if ((fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  root = 0.5 * (a + b);
  return true;
}

// Expand [-w, w] geometrically until the residual changes sign inside.
bool solve_expanding(const std::function<double(double)>& f, double& root) {
  double w = 1.0;
  for (int i = 0; i < 120; ++i) {
    if (bisect(f, -w, w, root)) return true;
    w *= 8.0;
    if (!std::isfinite(w)) break;
  }
  return false;
}

double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace

RandomScenario make_scenario(std::uint64_t seed, std::uint64_t index) {
  // Per-index stream: mixing the index through the same generator keeps the
  // batch order-independent and parallel-safe.
  SplitMix rng{seed ^ (0xD1B54A32D192ED03ULL * (index + 1))};

  for (int attempt = 0; attempt < 1000; ++attempt) {
    RandomScenario s;
    s.seed = seed;
    s.index = index;
    RobotParams& p = s.params;
    p.m_b = rng.uniform(0.5, 8.0);
    p.m_t = rng.uniform(0.5, 8.0);
    p.m_link = rng.uniform(0.05, 1.0);
    p.m_end = rng.uniform(0.1, 2.0);
    p.m_tw = rng.uniform(0.05, 1.0);
    p.d_b = rng.uniform(0.05, 0.5);
    p.d_t = rng.uniform(0.05, 0.6);
    p.l = rng.uniform(0.03, 0.12);
    p.w_latch = rng.uniform(0.005, 0.03);
    p.w_b = rng.uniform(0.005, 0.05);
    p.r_w = rng.uniform(0.01, 0.08);
    p.l_w = rng.uniform(0.01, 0.06);
    p.E_rubber = rng.uniform(0.2e6, 5e6);
    p.mu_W = rng.uniform(0.1, 1.5);
    p.mu_R = rng.uniform(0.1, 1.5);
    p.gamma = rng.uniform(0.05, 0.6);
    p.a_d = rng.uniform(0.0, 3.0);
    p.g = 9.81;
    p.G_dr = rng.uniform(0.3, 3.0);
    p.G_turret = rng.uniform(1.0, 10.0);
    s.column.d_c = rng.uniform(0.05, 0.5);
    s.n = rng.uniform_int(2, 10);
    s.k_tw = rng.uniform_int(0, 8);

    const double alpha = link_angle_raw(p.l, p.w_b, s.column.d_c);
    const double c = std::cos(kPi - s.n * alpha);
    if (std::abs(p.mu_W * c + p.mu_R) <= 1e-6) continue;
    if (std::abs(std::tan(p.gamma) * c - p.mu_R) <= 1e-6) continue;
    return s;
  }
  // With the ranges above the margins reject only a sliver of the space;
  // hitting the attempt cap means the generator itself is broken.
  throw NoSolution("scenario generation failed to satisfy margins");
}

double reference_patch_integral(double l_w, double h_w) {
  constexpr int kCells = 1000;
  if (!(l_w > 0.0) || !(h_w > 0.0)) return 0.0;
  const double hy = l_w / kCells;
  const double hz = h_w / kCells;
  double sum = 0.0;
  for (int i = 0; i < kCells; ++i) {
    const double y = -0.5 * l_w + (i + 0.5) * hy;
    for (int j = 0; j < kCells; ++j) {
      const double z = -0.5 * h_w + (j + 0.5) * hz;
      sum += std::hypot(y, z);
    }
  }
  return sum * hy * hz;
}

double rect_integral_closed_form(double l_w, double h_w) {
  if (!(l_w > 0.0) || !(h_w > 0.0)) return 0.0;
  const double a = 0.5 * l_w;
  const double b = 0.5 * h_w;
  const double r = std::hypot(a, b);
  const double quarter = a * b * r / 3.0 +
                         (a * a * a / 6.0) * std::log((b + r) / a) +
                         (b * b * b / 6.0) * std::log((a + r) / b);
  return 4.0 * quarter;
}

CrosscheckResult equilibrium_crosscheck(const RandomScenario& scenario) {
  const RobotParams& p = scenario.params;
  const ColumnSpec& col = scenario.column;
  const int n = scenario.n;

  const double alpha = link_angle_raw(p.l, p.w_b, col.d_c);
  const double c = std::cos(kPi - n * alpha);
  const double mu_w = col.mu_wheel(p);
  const double mu_r = col.mu_roller(p);
  const double d_2 = col.d_c;
  const double sg = std::sin(p.gamma);
  const double cg = std::cos(p.gamma);

  const ComEstimate com = com_distance_d1(p, col, n, scenario.k_tw);
  const double f_g = com.total_mass * p.g;
  const double d_1 = com.d1;
  const double f_b = 0.0;  // crosscheck runs the F_B = 0 system

  CrosscheckResult result;

  // Torque balance about the wheel contact, solved for the roller normal.
  const auto torque_residual = [&](double d1_value) {
    return [&, d1_value](double n_r) {
      return f_g * d1_value * cg + 2.0 * mu_r * n_r * d_2 * cg -
             2.0 * n_r * d_2 * sg * c;
    };
  };

  double n_r_num = 0.0;
  if (!solve_expanding(torque_residual(d_1), n_r_num)) return result;

  // Wheel normal and friction capacity from the numeric roller normal vs the
  // closed forms used by the library.
  const double n_w_num = 2.0 * n_r_num * c;
  const double n_w_closed = wheel_normal_raw(f_g, d_1, d_2, p.gamma, c, mu_r);
  double worst = rel_diff(n_w_num, n_w_closed);

  const WheelCapacity cap =
      wheel_friction_capacity_at(p, col, n, com.total_mass, d_1);
  worst = std::max(worst, rel_diff(std::abs(mu_w * n_w_num), cap.f_w));

  // Self-lock boundary: the signed moment arm at which gravity exactly equals
  // the friction the balance can supply.
  const auto lock_residual = [&](double d1_value) {
    double n_r = 0.0;
    if (!solve_expanding(torque_residual(d1_value), n_r))
      return std::numeric_limits<double>::quiet_NaN();
    return f_g - (mu_w * 2.0 * n_r * c + 2.0 * (mu_r * n_r + f_b));
  };

  double d1_boundary = 0.0;
  if (!solve_expanding(lock_residual, d1_boundary)) return result;

  const double threshold_closed =
      self_lock_threshold_raw(d_2, p.gamma, c, mu_w, mu_r);
  worst = std::max(worst, rel_diff(std::abs(d1_boundary),
                                   std::abs(threshold_closed)));
  worst = std::max(worst, rel_diff(std::abs(d1_boundary),
                                   self_lock_threshold(p, col, n)));

  // At the boundary the closed-form wheel friction must equal the
  // gravity-minus-roller-friction route.
  double n_r_boundary = 0.0;
  if (!solve_expanding(torque_residual(d1_boundary), n_r_boundary))
    return result;
  const double f_w_route_a =
      mu_w * wheel_normal_raw(f_g, d1_boundary, d_2, p.gamma, c, mu_r);
  const double f_w_route_b = f_g - 2.0 * (mu_r * n_r_boundary + f_b);
  worst = std::max(worst, rel_diff(f_w_route_a, f_w_route_b));

  result.max_rel_discrepancy = worst;
  result.converged = std::isfinite(worst);
  return result;
}

SuiteResult run_equilibrium_suite(std::uint64_t seed, std::uint64_t cases) {
  SuiteResult suite;
  suite.cases = cases;
  for (std::uint64_t i = 0; i < cases; ++i) {
    const CrosscheckResult r = equilibrium_crosscheck(make_scenario(seed, i));
    if (!r.converged || r.max_rel_discrepancy > 1e-9) ++suite.failures;
    suite.worst = std::max(suite.worst, r.max_rel_discrepancy);
  }
  return suite;
}

SuiteResult run_quadrature_suite(std::uint64_t seed, std::uint64_t cases) {
  SuiteResult suite;
  suite.cases = cases;
  for (std::uint64_t i = 0; i < cases; ++i) {
    SplitMix rng{seed ^ (0xA0761D6478BD642FULL * (i + 1))};
    const double l_w = rng.uniform(1e-3, 0.08);
    const double h_w = rng.uniform(1e-3, 0.08);
    const double adaptive = patch_radial_integral(l_w, h_w, 1e-9);
    const double reference = reference_patch_integral(l_w, h_w);
    const double rel = rel_diff(adaptive, reference);
    if (rel > 1e-6) ++suite.failures;
    suite.worst = std::max(suite.worst, rel);
  }
  return suite;
}

}  // namespace climbdesign
