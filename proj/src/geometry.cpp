#include "climbdesign/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "climbdesign/errors.hpp"

namespace climbdesign {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_pair(const RobotParams& params, const ColumnSpec& column) {
  params.validate();
  column.validate();
}

void require_links(int n, int n_floor) {
  if (n < n_floor) {
    std::ostringstream msg;
    msg << "link count n must be >= " << n_floor << ", got " << n;
    throw InvalidParameter(msg.str());
  }
}

}  // namespace

double link_angle_raw(double l, double w_b, double d_c) {
  // atan2 keeps the d_c -> 0 limit well defined (alpha -> pi).
  return 2.0 * std::atan2(l, 2.0 * w_b + d_c);
}

double latch_clearance_raw(double l, double w_latch, double w_b, double d_c,
                           double alpha, int n) {
  double reach = 0.0;
  for (int k = 1; k < n; ++k) reach += l * std::sin(k * alpha);
  reach += 0.5 * l * std::sin(n * alpha);
  reach += w_latch * std::sin(n * alpha - kPi / 2.0);
  return reach - w_b - d_c;
}

double link_com_raw(double l, double alpha, int n, double r_w) {
  double s = 0.0;
  for (int k = 1; k < n; ++k) s += std::sin(k * alpha);
  return 0.5 * l * s - r_w;
}

double end_com_raw(double l, double w_latch, double alpha, int n, double r_w) {
  double reach = 0.0;
  for (int k = 1; k < n; ++k) reach += l * std::sin(k * alpha);
  reach += 0.5 * l * std::sin(n * alpha);
  reach += w_latch * std::sin(n * alpha - kPi / 2.0);
  return reach - r_w;
}

double link_angle(const RobotParams& params, const ColumnSpec& column) {
  validate_pair(params, column);
  return link_angle_raw(params.l, params.w_b, column.d_c);
}

double latch_clearance(const RobotParams& params, const ColumnSpec& column, int n) {
  validate_pair(params, column);
  require_links(n, 1);
  const double alpha = link_angle_raw(params.l, params.w_b, column.d_c);
  return latch_clearance_raw(params.l, params.w_latch, params.w_b, column.d_c,
                             alpha, n);
}

ArmConfiguration links_for_diameter(const RobotParams& params,
                                    const ColumnSpec& column, int n_cap) {
  validate_pair(params, column);
  const double alpha = link_angle_raw(params.l, params.w_b, column.d_c);
  for (int n = params.n_min; n <= n_cap; ++n) {
    const double clearance = latch_clearance_raw(
        params.l, params.w_latch, params.w_b, column.d_c, alpha, n);
    if (clearance >= params.c_latch_min) {
      ArmConfiguration cfg;
      cfg.n = n;
      cfg.alpha = alpha;
      cfg.d_latch = clearance;
      cfg.wrap_angle = n * alpha;
      cfg.wrap_ok = !(cfg.wrap_angle > kPi);
      return cfg;
    }
  }
  std::ostringstream msg;
  msg << "no link count up to " << n_cap << " reaches latch clearance "
      << params.c_latch_min << " m at d_c = " << column.d_c << " m";
  throw NoSolution(msg.str());
}

double link_com_distance(const RobotParams& params, const ColumnSpec& column, int n) {
  validate_pair(params, column);
  require_links(n, 1);
  const double alpha = link_angle_raw(params.l, params.w_b, column.d_c);
  return link_com_raw(params.l, alpha, n, params.r_w);
}

double end_com_distance(const RobotParams& params, const ColumnSpec& column, int n) {
  validate_pair(params, column);
  require_links(n, 1);
  const double alpha = link_angle_raw(params.l, params.w_b, column.d_c);
  return end_com_raw(params.l, params.w_latch, alpha, n, params.r_w);
}

ComEstimate com_distance_d1(const RobotParams& params, const ColumnSpec& column,
                            int n, int k_tw) {
  validate_pair(params, column);
  require_links(n, params.n_min);
  if (k_tw < 0) throw InvalidParameter("tail-weight count k_tw must be >= 0");

  const double alpha = link_angle_raw(params.l, params.w_b, column.d_c);
  const double d_link = link_com_raw(params.l, alpha, n, params.r_w);
  const double d_end =
      end_com_raw(params.l, params.w_latch, alpha, n, params.r_w);
  const double m_tail = params.m_t + k_tw * params.m_tw;

  ComEstimate est;
  est.moment = 2.0 * (n - 1) * params.m_link * d_link + params.m_end * d_end -
               params.m_b * params.d_b - m_tail * params.d_t;
  est.total_mass =
      params.m_b + m_tail + 2.0 * (n - 1) * params.m_link + params.m_end;
  est.d1 = std::abs(est.moment) / est.total_mass;
  return est;
}

}  // namespace climbdesign
