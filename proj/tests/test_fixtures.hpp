#pragma once

#include "climbdesign/params.hpp"

namespace climbdesign::testing {

/// Parameter set of the reference prototype (matches configs/table3.cfg).
inline RobotParams reference_params() {
  RobotParams p;
  p.m_b = 1.873;
  p.m_t = 3.311;
  p.m_link = 0.221;
  p.m_end = 0.754;
  p.m_tw = 0.261;
  p.d_b = 0.1546;
  p.d_t = 0.3293;
  p.l = 0.065;
  p.w_latch = 0.011;
  p.w_b = 0.020;
  p.r_w = 0.036;
  p.l_w = 0.032;
  p.E_rubber = 0.7e6;
  p.mu_W = 0.7;
  p.mu_R = 0.5;
  p.gamma = 0.175;
  p.a_d = 1.0;
  p.g = 9.81;
  p.G_dr = 0.75;
  p.G_turret = 8.0 / 3.0;
  p.F_B_aggregate = 0.0;
  p.c_latch_min = 0.010;
  p.n_min = 2;
  p.k_tw_max = 8;
  return p;
}

inline MotorSpec reference_drive_motor() { return {"drive", 6.865, 41.0}; }
inline MotorSpec reference_turret_motor() { return {"turret", 1.863, 7.0}; }

}  // namespace climbdesign::testing
