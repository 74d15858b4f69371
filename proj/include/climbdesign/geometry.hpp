#pragma once

#include "climbdesign/params.hpp"

namespace climbdesign {

/// Derived per-diameter arm geometry.
struct ArmConfiguration {
  int n = 0;               ///< links per arm
  double alpha = 0.0;      ///< inter-link angle [rad]
  double d_latch = 0.0;    ///< latch-to-column clearance [m], may be negative
  double wrap_angle = 0.0; ///< n*alpha [rad]
  bool wrap_ok = false;    ///< false when the arm would wrap past the far side (n*alpha > pi)
};

// Scalar kernels. These carry the bare formulas with no input validation so
// tests and the oracle suite can probe limits outside the validated domain.
double link_angle_raw(double l, double w_b, double d_c);
double latch_clearance_raw(double l, double w_latch, double w_b, double d_c,
                           double alpha, int n);
double link_com_raw(double l, double alpha, int n, double r_w);
double end_com_raw(double l, double w_latch, double alpha, int n, double r_w);

/// Inter-link angle alpha = 2*atan(l / (2*w_b + d_c)); always in (0, pi).
double link_angle(const RobotParams& params, const ColumnSpec& column);

/// Clearance between the latch hook and the column surface for an n-link arm.
/// Negative means the arm is too short to close around this column.
double latch_clearance(const RobotParams& params, const ColumnSpec& column, int n);

/// Smallest n >= n_min whose latch clearance meets c_latch_min. Throws
/// NoSolution once the search exceeds n_cap (geometrically unreachable closure).
ArmConfiguration links_for_diameter(const RobotParams& params,
                                    const ColumnSpec& column, int n_cap = 64);

/// Horizontal distance from wheel contact to the standard links' combined COM.
double link_com_distance(const RobotParams& params, const ColumnSpec& column, int n);

/// Horizontal distance from wheel contact to the end-link COM.
double end_com_distance(const RobotParams& params, const ColumnSpec& column, int n);

/// COM moment-arm estimate for one (n, tail-weight) configuration.
struct ComEstimate {
  double d1 = 0.0;          ///< |moment| / total_mass [m]
  double total_mass = 0.0;  ///< [kg]
  double moment = 0.0;      ///< signed mass moment (numerator before |.|) [kg*m]
};

/// d1 = |(2(n-1) m_link d_link + m_end d_end - m_b d_b - m_t' d_t) / m|
/// with m_t' = m_t + k_tw * m_tw and m the total mass.
ComEstimate com_distance_d1(const RobotParams& params, const ColumnSpec& column,
                            int n, int k_tw);

}  // namespace climbdesign
