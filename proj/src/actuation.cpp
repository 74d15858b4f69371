#include "climbdesign/actuation.hpp"

#include <cmath>
#include <numbers>

#include "climbdesign/errors.hpp"
#include "climbdesign/quadrature.hpp"

namespace climbdesign {

namespace {
constexpr double kTurretQuadratureTol = 1e-8;
}

DriveRequirement required_drive_torque(const RobotParams& params,
                                       double total_mass) {
  params.validate();
  if (!(std::isfinite(total_mass) && total_mass > 0.0))
    throw InvalidParameter("total_mass must be finite and > 0");
  DriveRequirement req;
  req.tau_m = params.r_w * (total_mass * params.a_d + total_mass * params.g) /
              params.G_dr;
  req.f_dr = total_mass * (params.a_d + params.g);
  return req;
}

ContactPatch contact_patch(const RobotParams& params, double n_w) {
  params.validate();
  if (!(std::isfinite(n_w) && n_w >= 0.0))
    throw InvalidParameter("N_W must be finite and >= 0");
  ContactPatch patch;
  if (n_w == 0.0) {
    patch.degenerate = true;
    return patch;
  }
  patch.h_w = n_w / (params.E_rubber * params.l_w);
  patch.sigma_w = n_w / (params.l_w * patch.h_w);  // simplifies to E_rubber
  return patch;
}

double turret_torque(const RobotParams& params, const ColumnSpec& column,
                     double n_w) {
  const ContactPatch patch = contact_patch(params, n_w);
  if (patch.degenerate) return 0.0;
  const double mu_w = column.mu_wheel(params);
  return mu_w * patch.sigma_w / params.G_turret *
         patch_radial_integral(params.l_w, patch.h_w, kTurretQuadratureTol);
}

double turret_torque(const RobotParams& params, double n_w) {
  ColumnSpec no_overrides;
  no_overrides.d_c = 1.0;
  return turret_torque(params, no_overrides, n_w);
}

ActuationReport actuation_report(const RobotParams& params,
                                 const ColumnSpec& column, double total_mass,
                                 double n_w) {
  const DriveRequirement drive = required_drive_torque(params, total_mass);
  const ContactPatch patch = contact_patch(params, n_w);
  ActuationReport report;
  report.tau_m = drive.tau_m;
  report.f_dr = drive.f_dr;
  report.sigma_w = patch.sigma_w;
  report.h_w = patch.h_w;
  report.tau_turret = turret_torque(params, column, n_w);
  return report;
}

MotorMargin motor_margin(double required, const MotorSpec& motor) {
  if (!(std::isfinite(required) && required >= 0.0))
    throw InvalidParameter("required torque must be finite and >= 0");
  MotorMargin m;
  m.margin = motor.rated_torque - required;
  m.pass = m.margin >= 0.0;
  return m;
}

double climb_speed_estimate(const RobotParams& params, double rated_rpm) {
  return rated_rpm * 2.0 * std::numbers::pi * params.r_w / 60.0;
}

}  // namespace climbdesign
