#include "climbdesign/statics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "climbdesign/errors.hpp"
#include "climbdesign/geometry.hpp"

namespace climbdesign {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingularEps = 1e-9;

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

double cos_pna_for(const RobotParams& params, const ColumnSpec& column, int n) {
  const double alpha = link_angle_raw(params.l, params.w_b, column.d_c);
  return std::cos(kPi - n * alpha);
}

}  // namespace

double self_lock_threshold_raw(double d_2, double gamma, double cos_pna,
                               double mu_w, double mu_r) {
  return d_2 * (std::tan(gamma) * cos_pna - mu_r) / (mu_w * cos_pna + mu_r);
}

double wheel_normal_raw(double f_g, double d_1, double d_2, double gamma,
                        double cos_pna, double mu_r) {
  return f_g * d_1 * cos_pna /
         (d_2 * std::tan(gamma) * cos_pna - mu_r * d_2);
}

double self_lock_threshold(const RobotParams& params, const ColumnSpec& column,
                           int n) {
  params.validate();
  column.validate();
  const double c = cos_pna_for(params, column, n);
  const double mu_w = column.mu_wheel(params);
  const double mu_r = column.mu_roller(params);
  const double denom = mu_w * c + mu_r;
  if (std::abs(denom) < kSingularEps) {
    std::ostringstream msg;
    msg << "self-lock denominator mu_W*cos(pi-n*alpha) + mu_R = " << denom
        << " is singular; no finite d_1 self-locks";
    throw SingularConfiguration(msg.str());
  }
  return std::abs(
      self_lock_threshold_raw(column.d_c, params.gamma, c, mu_w, mu_r));
}

StaticsReport self_lock_check(const RobotParams& params, const ColumnSpec& column,
                              int n, int k_tw) {
  params.validate();
  column.validate();
  if (params.gamma == 0.0)
    throw InvalidParameter(
        "gamma = 0 is not a reachable configuration: the tilt never vanishes "
        "on a loaded column");

  const ComEstimate com = com_distance_d1(params, column, n, k_tw);
  const double threshold = self_lock_threshold(params, column, n);
  const WheelCapacity cap =
      wheel_friction_capacity_at(params, column, n, com.total_mass, com.d1);
  const double c = cos_pna_for(params, column, n);
  const double mu_r = column.mu_roller(params);
  const double denom =
      column.d_c * (std::tan(params.gamma) * c - mu_r);

  StaticsReport report;
  report.F_G = com.total_mass * params.g;
  report.N_W = cap.n_w;
  // roller normal from the torque balance; N_W = 2*N_R*|cos(pi-n*alpha)| holds
  // identically among the reported magnitudes
  report.N_R = std::abs(report.F_G * com.d1 / (2.0 * denom));
  report.F_W = cap.f_w;
  report.F_R = mu_r * report.N_R;
  report.F_B = params.F_B_aggregate;
  report.d_1 = com.d1;
  report.d_2 = column.d_c;
  report.d1_threshold = threshold;
  report.self_lock_ok = com.d1 >= threshold;
  report.denominator_sign = cap.denominator_sign;
  return report;
}

WheelCapacity wheel_friction_capacity_at(const RobotParams& params,
                                         const ColumnSpec& column, int n,
                                         double total_mass, double d_1) {
  params.validate();
  column.validate();
  if (!(std::isfinite(d_1) && d_1 >= 0.0))
    throw InvalidParameter("d_1 must be finite and >= 0");
  if (!(std::isfinite(total_mass) && total_mass > 0.0))
    throw InvalidParameter("total_mass must be finite and > 0");

  const double c = cos_pna_for(params, column, n);
  const double mu_w = column.mu_wheel(params);
  const double mu_r = column.mu_roller(params);
  const double d_2 = column.d_c;
  const double denom = d_2 * std::tan(params.gamma) * c - mu_r * d_2;
  if (std::abs(denom) < kSingularEps * d_2) {
    std::ostringstream msg;
    msg << "wheel-capacity denominator d_2*(tan(gamma)*cos(pi-n*alpha) - mu_R) = "
        << denom << " is singular";
    throw SingularConfiguration(msg.str());
  }

  const double f_g = total_mass * params.g;
  WheelCapacity cap;
  cap.denominator_sign = sign_of(denom);
  cap.n_w = std::abs(wheel_normal_raw(f_g, d_1, d_2, params.gamma, c, mu_r));
  cap.f_w = mu_w * cap.n_w;
  return cap;
}

WheelCapacity wheel_friction_capacity(const RobotParams& params,
                                      const ColumnSpec& column, int n, int k_tw) {
  const ComEstimate com = com_distance_d1(params, column, n, k_tw);
  return wheel_friction_capacity_at(params, column, n, com.total_mass, com.d1);
}

bool no_slip_check(double f_dr, double capacity) {
  if (!(std::isfinite(f_dr) && f_dr >= 0.0))
    throw InvalidParameter("drive force must be finite and >= 0");
  if (!(std::isfinite(capacity) && capacity >= 0.0))
    throw InvalidParameter("friction capacity must be finite and >= 0");
  return f_dr <= capacity;
}

}  // namespace climbdesign
