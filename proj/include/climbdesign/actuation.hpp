#pragma once

#include "climbdesign/params.hpp"

namespace climbdesign {

/// Drive motor torque and the corresponding force at the wheel rim.
struct DriveRequirement {
  double tau_m = 0.0;  ///< required motor torque r_w*(m*a_d + m*g)/G_dr [N*m]
  double f_dr = 0.0;   ///< drive force at the wheel m*(a_d + g) [N]
};

DriveRequirement required_drive_torque(const RobotParams& params,
                                       double total_mass);

/// Flattened wheel-column contact patch under normal load N_W.
struct ContactPatch {
  double sigma_w = 0.0;  ///< contact pressure [Pa]; equals E_rubber when loaded
  double h_w = 0.0;      ///< compressed patch height N_W/(E_rubber*l_w) [m]
  bool degenerate = false;  ///< N_W = 0: no patch, turret torque 0 by convention
};

ContactPatch contact_patch(const RobotParams& params, double n_w);

/// Turret motor torque needed to spin the loaded wheel about the column axis:
/// (mu_W*sigma_W/G_turret) * integral of sqrt(y^2+z^2) over the contact patch.
/// Adaptive quadrature; returns 0 for a degenerate patch.
double turret_torque(const RobotParams& params, double n_w);
double turret_torque(const RobotParams& params, const ColumnSpec& column,
                     double n_w);

/// Combined actuator sizing at one loading state.
struct ActuationReport {
  double tau_m = 0.0;       ///< required drive torque [N*m]
  double f_dr = 0.0;        ///< drive force at the wheel [N]
  double sigma_w = 0.0;     ///< contact pressure [Pa]
  double h_w = 0.0;         ///< contact patch height [m]
  double tau_turret = 0.0;  ///< required turret torque [N*m]
};

/// Bundles the drive requirement, contact patch and turret torque for a
/// robot of the given mass pressing on the column with n_w.
ActuationReport actuation_report(const RobotParams& params,
                                 const ColumnSpec& column, double total_mass,
                                 double n_w);

/// Signed torque slack of a catalog motor against a requirement.
struct MotorMargin {
  double margin = 0.0;  ///< rated - required [N*m]
  bool pass = false;    ///< margin >= 0 (boundary inclusive)
};

MotorMargin motor_margin(double required, const MotorSpec& motor);

/// Rim speed the motor's rated RPM corresponds to [m/s]; reported, never gating.
double climb_speed_estimate(const RobotParams& params, double rated_rpm);

}  // namespace climbdesign
