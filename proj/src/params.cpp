#include "climbdesign/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "climbdesign/errors.hpp"

namespace climbdesign {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameter(what);
}

void require_positive(double v, const char* name) {
  std::ostringstream msg;
  msg << name << " must be finite and > 0, got " << v;
  require(std::isfinite(v) && v > 0.0, msg.str());
}

void require_friction(double v, const char* name) {
  std::ostringstream msg;
  msg << name << " must be a friction coefficient in (0, 2], got " << v;
  require(std::isfinite(v) && v > 0.0 && v <= 2.0, msg.str());
}

}  // namespace

void RobotParams::validate() const {
  require_positive(m_b, "m_b");
  require_positive(m_t, "m_t");
  require_positive(m_link, "m_link");
  require_positive(m_end, "m_end");
  require_positive(m_tw, "m_tw");
  require_positive(d_b, "d_b");
  require_positive(d_t, "d_t");
  require_positive(l, "l");
  require_positive(w_latch, "w_latch");
  require_positive(w_b, "w_b");
  require_positive(r_w, "r_w");
  require_positive(l_w, "l_w");
  require_positive(E_rubber, "E_rubber");
  require_positive(g, "g");
  require_positive(G_dr, "G_dr");
  require_positive(G_turret, "G_turret");
  require_friction(mu_W, "mu_W");
  require_friction(mu_R, "mu_R");
  require(std::isfinite(gamma) && gamma >= 0.0 && gamma < std::numbers::pi / 2.0,
          "gamma must be in [0, pi/2)");
  require(std::isfinite(a_d), "a_d must be finite");
  require(std::isfinite(F_B_aggregate) && F_B_aggregate >= 0.0,
          "F_B_aggregate must be >= 0");
  require(std::isfinite(c_latch_min), "c_latch_min must be finite");
  require(n_min >= 2, "n_min must be >= 2 (one standard link + one end link)");
  require(k_tw_max >= 0, "k_tw_max must be >= 0");
}

void ColumnSpec::validate() const {
  if (!(std::isfinite(d_c) && d_c > 0.0)) {
    std::ostringstream msg;
    msg << "column diameter d_c must be finite and > 0, got " << d_c;
    throw InvalidParameter(msg.str());
  }
  if (mu_W_override) require_friction(*mu_W_override, "mu_W_override");
  if (mu_R_override) require_friction(*mu_R_override, "mu_R_override");
}

void MotorSpec::validate() const {
  if (!(std::isfinite(rated_torque) && rated_torque > 0.0))
    throw InvalidParameter("motor '" + name + "': rated_torque must be > 0");
  if (!(std::isfinite(rated_speed) && rated_speed > 0.0))
    throw InvalidParameter("motor '" + name + "': rated_speed must be > 0");
}

}  // namespace climbdesign
