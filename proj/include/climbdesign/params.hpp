#pragma once

#include <optional>
#include <string>

namespace climbdesign {

/// Fixed physical parameters of the robot. All values are strict SI
/// (m, kg, N, Pa, rad); the config layer converts from mm / MPa on ingestion.
struct RobotParams {
  // masses [kg]
  double m_b = 0.0;     ///< body
  double m_t = 0.0;     ///< base tail (without modular weights)
  double m_link = 0.0;  ///< one standard link
  double m_end = 0.0;   ///< combined end-link term of the COM equation
  double m_tw = 0.0;    ///< one modular tail weight

  // geometry [m]
  double d_b = 0.0;      ///< body COM distance from wheel contact
  double d_t = 0.0;      ///< tail COM distance from wheel contact
  double l = 0.0;        ///< link length
  double w_latch = 0.0;  ///< end-link center to latch joint
  double w_b = 0.0;      ///< link center to column contact standoff
  double r_w = 0.0;      ///< drive wheel radius
  double l_w = 0.0;      ///< drive wheel width

  double E_rubber = 0.0;  ///< wheel rubber elastic modulus [Pa]

  double mu_W = 0.0;  ///< wheel-column friction coefficient
  double mu_R = 0.0;  ///< end-roller-column friction coefficient

  double gamma = 0.0;  ///< robot tilt from the horizontal plane [rad]
  double a_d = 0.0;    ///< desired climb acceleration [m/s^2]
  double g = 9.81;     ///< gravitational acceleration [m/s^2]

  double G_dr = 0.0;      ///< drive transmission ratio
  double G_turret = 0.0;  ///< turret transmission ratio

  double F_B_aggregate = 0.0;  ///< aggregate ball-transfer friction [N]

  // design-procedure knobs
  double c_latch_min = 0.010;  ///< minimum accepted latch clearance [m]
  int n_min = 2;               ///< smallest physical arm: one link + one end link
  int k_tw_max = 8;            ///< tail-weight mounting capacity

  /// Throws InvalidParameter naming the violated invariant.
  void validate() const;
};

/// The climbing target: a column diameter plus optional per-column
/// friction overrides.
struct ColumnSpec {
  double d_c = 0.0;  ///< column diameter [m]
  std::optional<double> mu_W_override;
  std::optional<double> mu_R_override;

  void validate() const;

  double mu_wheel(const RobotParams& p) const {
    return mu_W_override.value_or(p.mu_W);
  }
  double mu_roller(const RobotParams& p) const {
    return mu_R_override.value_or(p.mu_R);
  }
};

/// One catalog motor/gearbox entry.
struct MotorSpec {
  std::string name;
  double rated_torque = 0.0;  ///< [N*m]
  double rated_speed = 0.0;   ///< [RPM]

  /// Catalog-ingestion validation (rated values strictly positive).
  void validate() const;
};

}  // namespace climbdesign
