#include "climbdesign/design.hpp"

#include <cmath>
#include <sstream>

#include "climbdesign/actuation.hpp"
#include "climbdesign/errors.hpp"

namespace climbdesign {

namespace {

BallastReason combine(BallastReason acc, bool self_lock_failed,
                      bool no_slip_failed) {
  const bool sl = self_lock_failed || acc == BallastReason::self_lock ||
                  acc == BallastReason::both;
  const bool ns = no_slip_failed || acc == BallastReason::no_slip ||
                  acc == BallastReason::both;
  if (sl && ns) return BallastReason::both;
  if (sl) return BallastReason::self_lock;
  if (ns) return BallastReason::no_slip;
  return BallastReason::none;
}

}  // namespace

DesignPoint design_for_diameter(const RobotParams& params,
                                const ColumnSpec& column,
                                const MotorSpec& motor_drive,
                                const MotorSpec& motor_turret, int k_tw_floor,
                                bool allow_ballast) {
  params.validate();
  column.validate();
  if (k_tw_floor < 0 || k_tw_floor > params.k_tw_max)
    throw InvalidParameter("k_tw_floor must be in [0, k_tw_max]");

  const ArmConfiguration arm = links_for_diameter(params, column);

  // Smallest sufficient ballast: re-evaluate both static checks after each
  // added weight.
  int k = k_tw_floor;
  BallastReason reason = BallastReason::none;
  bool self_lock_ok = false;
  bool no_slip_ok = false;
  while (true) {
    const ComEstimate com = com_distance_d1(params, column, arm.n, k);
    const double threshold = self_lock_threshold(params, column, arm.n);
    const WheelCapacity cap = wheel_friction_capacity_at(
        params, column, arm.n, com.total_mass, com.d1);
    const DriveRequirement req =
        required_drive_torque(params, com.total_mass);
    self_lock_ok = com.d1 >= threshold;
    no_slip_ok = no_slip_check(req.f_dr, cap.f_w);
    if (self_lock_ok && no_slip_ok) break;
    if (!allow_ballast || k >= params.k_tw_max) break;
    reason = combine(reason, !self_lock_ok, !no_slip_ok);
    ++k;
  }

  const StaticsReport statics = self_lock_check(params, column, arm.n, k);
  const ComEstimate com = com_distance_d1(params, column, arm.n, k);
  const DriveRequirement req = required_drive_torque(params, com.total_mass);
  const MotorMargin drive_margin = motor_margin(req.tau_m, motor_drive);
  const double tau_turret_req = turret_torque(params, column, statics.N_W);
  const MotorMargin turret_margin = motor_margin(tau_turret_req, motor_turret);

  DesignPoint point;
  point.d_c = column.d_c;
  point.n = arm.n;
  point.k_tw = k;
  point.d_1 = com.d1;
  point.total_mass = com.total_mass;
  point.tau_required = req.tau_m;
  point.tau_turret = tau_turret_req;
  point.self_lock_ok = self_lock_ok;
  point.no_slip_ok = no_slip_ok;
  point.torque_ok = drive_margin.pass;
  point.feasible = self_lock_ok && no_slip_ok && drive_margin.pass;
  point.self_lock_margin = com.d1 - statics.d1_threshold;
  point.no_slip_margin = statics.F_W - req.f_dr;
  point.torque_margin = drive_margin.margin;
  point.turret_margin = turret_margin.margin;
  point.ballast_reason = reason;
  point.arm = arm;
  point.statics = statics;
  return point;
}

DesignCurve sweep(const RobotParams& params, double d_min, double d_max,
                  double step, const MotorSpec& motor_drive,
                  const MotorSpec& motor_turret, bool allow_ballast) {
  params.validate();
  if (!(std::isfinite(d_min) && std::isfinite(d_max) && std::isfinite(step)) ||
      !(0.0 < d_min && d_min < d_max) || !(step > 0.0)) {
    std::ostringstream msg;
    msg << "sweep range requires 0 < d_min < d_max and step > 0, got d_min = "
        << d_min << ", d_max = " << d_max << ", step = " << step;
    throw InvalidParameter(msg.str());
  }

  DesignCurve curve;
  const double end_slack = 1e-9 * step;
  int k_carry = 0;
  for (int i = 0;; ++i) {
    const double d_c = d_min + i * step;
    if (d_c > d_max + end_slack) break;
    ColumnSpec column;
    column.d_c = d_c;
    const DesignPoint point =
        design_for_diameter(params, column, motor_drive, motor_turret,
                            allow_ballast ? k_carry : 0, allow_ballast);
    k_carry = point.k_tw;

    if (!curve.points.empty()) {
      const DesignPoint& prev = curve.points.back();
      if (point.n > prev.n) curve.link_addition_diameters.push_back(d_c);
      if (point.k_tw > prev.k_tw) {
        curve.weight_addition_diameters.push_back(d_c);
        curve.weight_addition_reasons.push_back(point.ballast_reason);
      }
    }
    curve.points.push_back(point);
  }

  for (const DesignPoint& point : curve.points) {
    if (!point.feasible) break;
    curve.max_climbable_diameter = point.d_c;
  }
  return curve;
}

}  // namespace climbdesign
