#pragma once

#include "climbdesign/params.hpp"

namespace climbdesign {

/// Forces and distances of the self-lock / no-slip analysis. Force fields are
/// reported as magnitudes; the raw sign of the shared denominator is kept in
/// denominator_sign so no information is lost to the |.| forms.
struct StaticsReport {
  double F_G = 0.0;  ///< gravitational force m*g [N]
  double N_W = 0.0;  ///< wheel normal force magnitude [N]
  double N_R = 0.0;  ///< per-roller normal force magnitude [N]
  double F_W = 0.0;  ///< wheel friction capacity mu_W*N_W [N]
  double F_R = 0.0;  ///< per-roller friction mu_R*N_R [N]
  double F_B = 0.0;  ///< aggregate ball-transfer friction (configured) [N]
  double d_1 = 0.0;  ///< COM moment arm [m]
  double d_2 = 0.0;  ///< wheel-to-roller contact distance (= d_c) [m]
  double d1_threshold = 0.0;  ///< self-lock lower bound on d_1 [m]
  bool self_lock_ok = false;
  int denominator_sign = 0;  ///< sign of d_2*(tan(gamma)*cos(pi - n*alpha) - mu_R)
};

// Signed kernels, no |.| applied. cos_pna is cos(pi - n*alpha).
double self_lock_threshold_raw(double d_2, double gamma, double cos_pna,
                               double mu_w, double mu_r);
double wheel_normal_raw(double f_g, double d_1, double d_2, double gamma,
                        double cos_pna, double mu_r);

/// Self-lock lower bound on d_1:
///   |d_2 (tan(gamma) cos(pi-n*alpha) - mu_R) / (mu_W cos(pi-n*alpha) + mu_R)|
/// Throws SingularConfiguration when the denominator vanishes (self-locking
/// unreachable for any finite d_1).
double self_lock_threshold(const RobotParams& params, const ColumnSpec& column,
                           int n);

/// Full static balance at the (n, k_tw) configuration. self_lock_ok compares
/// the COM arm from com_distance_d1 against self_lock_threshold. Rejects
/// gamma = 0 (the tilt never vanishes on a real column).
StaticsReport self_lock_check(const RobotParams& params, const ColumnSpec& column,
                              int n, int k_tw);

struct WheelCapacity {
  double f_w = 0.0;  ///< friction capacity magnitude [N]
  double n_w = 0.0;  ///< wheel normal force magnitude f_w / mu_W [N]
  int denominator_sign = 0;
};

/// |F_W| = |m g d_1 mu_W cos(pi-n*alpha) / (d_2 tan(gamma) cos(pi-n*alpha) - mu_R d_2)|
/// with caller-supplied total mass and moment arm.
WheelCapacity wheel_friction_capacity_at(const RobotParams& params,
                                         const ColumnSpec& column, int n,
                                         double total_mass, double d_1);

/// Same, with mass and d_1 taken from com_distance_d1(params, column, n, k_tw).
WheelCapacity wheel_friction_capacity(const RobotParams& params,
                                      const ColumnSpec& column, int n, int k_tw);

/// Drive force must not exceed the wheel friction capacity (boundary inclusive).
bool no_slip_check(double f_dr, double capacity);

}  // namespace climbdesign
