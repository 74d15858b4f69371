#pragma once

#include <optional>
#include <vector>

#include "climbdesign/geometry.hpp"
#include "climbdesign/params.hpp"
#include "climbdesign/statics.hpp"

namespace climbdesign {

/// Which failing condition(s) drove tail-weight additions at a design point.
enum class BallastReason { none, self_lock, no_slip, both };

/// Synthesized design and feasibility verdict at one column diameter.
struct DesignPoint {
  double d_c = 0.0;        ///< [m]
  int n = 0;               ///< links per arm
  int k_tw = 0;            ///< tail weights mounted
  double d_1 = 0.0;        ///< COM moment arm [m]
  double total_mass = 0.0; ///< [kg]
  double tau_required = 0.0;  ///< drive motor torque [N*m]
  double tau_turret = 0.0;    ///< turret motor torque [N*m]

  bool self_lock_ok = false;
  bool no_slip_ok = false;
  bool torque_ok = false;
  bool feasible = false;  ///< all three checks pass

  // signed slacks
  double self_lock_margin = 0.0;  ///< d_1 - threshold [m]
  double no_slip_margin = 0.0;    ///< capacity - F_dr [N]
  double torque_margin = 0.0;     ///< drive rated - required [N*m]
  double turret_margin = 0.0;     ///< turret rated - required [N*m], reported only

  BallastReason ballast_reason = BallastReason::none;
  ArmConfiguration arm;
  StaticsReport statics;
};

/// Design points across a diameter grid plus the adaptability metric.
struct DesignCurve {
  std::vector<DesignPoint> points;
  /// Largest grid diameter d with every grid diameter <= d feasible; empty
  /// when already the first grid point fails.
  std::optional<double> max_climbable_diameter;
  std::vector<double> link_addition_diameters;    ///< [m]
  std::vector<double> weight_addition_diameters;  ///< [m]
  std::vector<BallastReason> weight_addition_reasons;  ///< parallel to the above
};

/// Runs the iterative per-diameter synthesis: pick the link count from the
/// latch-clearance geometry, then add tail weights one at a time (starting at
/// k_tw_floor, never past k_tw_max) until both the self-lock and no-slip
/// conditions hold, then check the drive torque against the motor rating.
/// Exhausting the ballast cap yields an infeasible point, not an error.
DesignPoint design_for_diameter(const RobotParams& params,
                                const ColumnSpec& column,
                                const MotorSpec& motor_drive,
                                const MotorSpec& motor_turret,
                                int k_tw_floor = 0, bool allow_ballast = true);

/// Evaluates the grid d_min, d_min+step, ... (<= d_max). Ballast carries
/// forward along the grid: weights mounted at a smaller diameter stay on, so
/// n(d_c), k_tw(d_c), mass and required torque are non-decreasing staircases.
DesignCurve sweep(const RobotParams& params, double d_min, double d_max,
                  double step, const MotorSpec& motor_drive,
                  const MotorSpec& motor_turret, bool allow_ballast = true);

}  // namespace climbdesign
