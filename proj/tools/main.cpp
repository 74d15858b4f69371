// Command-line front end: feasibility checks, design sweeps, self-lock
// reports, motor-catalog margins and the numerical verification suites.
//
// Exit codes: 0 = feasible / all checks pass, 1 = infeasible or failed checks
// (full report still printed), 2 = usage, parse or validation error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "climbdesign/actuation.hpp"
#include "climbdesign/config.hpp"
#include "climbdesign/design.hpp"
#include "climbdesign/errors.hpp"
#include "climbdesign/oracle.hpp"
#include "climbdesign/statics.hpp"

namespace {

using namespace climbdesign;

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

const char* reason_name(BallastReason reason) {
  switch (reason) {
    case BallastReason::self_lock: return "self_lock";
    case BallastReason::no_slip: return "no_slip";
    case BallastReason::both: return "both";
    default: return "none";
  }
}

ColumnSpec make_column(double diameter_mm, std::optional<double> mu_w,
                       std::optional<double> mu_r) {
  ColumnSpec column;
  column.d_c = diameter_mm * 1e-3;
  column.mu_W_override = mu_w;
  column.mu_R_override = mu_r;
  column.validate();
  return column;
}

void print_design_point(const ConfigDocument& cfg, const DesignPoint& p,
                        const MotorSpec& drive, const MotorSpec& turret) {
  std::cout << "config_fingerprint: " << cfg.fingerprint << "\n"
            << "diameter_mm: " << fmt6(p.d_c * 1e3) << "\n"
            << "links_per_arm: " << p.n << "\n"
            << "tail_weights: " << p.k_tw << "\n"
            << "ballast_reason: " << reason_name(p.ballast_reason) << "\n"
            << "inter_link_angle_rad: " << fmt6(p.arm.alpha) << "\n"
            << "wrap_angle_rad: " << fmt6(p.arm.wrap_angle)
            << (p.arm.wrap_ok ? "" : " (past far side)") << "\n"
            << "latch_clearance_mm: " << fmt6(p.arm.d_latch * 1e3) << "\n"
            << "total_mass_kg: " << fmt6(p.total_mass) << "\n"
            << "d1_mm: " << fmt6(p.d_1 * 1e3) << "\n"
            << "d1_selflock_threshold_mm: " << fmt6(p.statics.d1_threshold * 1e3)
            << "\n"
            << "wheel_normal_N: " << fmt6(p.statics.N_W) << "\n"
            << "wheel_friction_capacity_N: " << fmt6(p.statics.F_W) << "\n"
            << "drive_force_N: " << fmt6(p.statics.F_W - p.no_slip_margin)
            << "\n"
            << "tau_drive_required_nm: " << fmt6(p.tau_required) << "\n"
            << "tau_drive_rated_nm: " << fmt6(drive.rated_torque) << "\n"
            << "tau_turret_required_nm: " << fmt6(p.tau_turret) << "\n"
            << "tau_turret_rated_nm: " << fmt6(turret.rated_torque) << "\n"
            << "self_lock: " << (p.self_lock_ok ? "ok" : "FAIL")
            << " (margin_mm " << fmt6(p.self_lock_margin * 1e3) << ")\n"
            << "no_slip: " << (p.no_slip_ok ? "ok" : "FAIL") << " (margin_N "
            << fmt6(p.no_slip_margin) << ")\n"
            << "drive_torque: " << (p.torque_ok ? "ok" : "FAIL")
            << " (margin_nm " << fmt6(p.torque_margin) << ")\n"
            << "feasible: " << (p.feasible ? "yes" : "no") << "\n";
}

std::string curve_csv(const DesignCurve& curve) {
  std::string out =
      "d_c_mm,n,k_tw,d1_mm,total_mass_kg,tau_drive_nm,tau_turret_nm,"
      "self_lock,no_slip,torque_ok,feasible\n";
  for (const DesignPoint& p : curve.points) {
    out += fmt6(p.d_c * 1e3);
    out += ',';
    out += std::to_string(p.n);
    out += ',';
    out += std::to_string(p.k_tw);
    out += ',';
    out += fmt6(p.d_1 * 1e3);
    out += ',';
    out += fmt6(p.total_mass);
    out += ',';
    out += fmt6(p.tau_required);
    out += ',';
    out += fmt6(p.tau_turret);
    out += ',';
    out += p.self_lock_ok ? '1' : '0';
    out += ',';
    out += p.no_slip_ok ? '1' : '0';
    out += ',';
    out += p.torque_ok ? '1' : '0';
    out += ',';
    out += p.feasible ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Design-evaluation engine for modular column-climbing robots.\n"
      "Config files use mm / kg / rad / MPa; reports use mm and N / N*m.\n"};
  app.require_subcommand(1);

  std::string config_path;
  double diameter_mm = 0.0;
  std::optional<double> mu_w_override;
  std::optional<double> mu_r_override;
  double drive_rated = 6.865, drive_rpm = 41.0;
  double turret_rated = 1.863, turret_rpm = 7.0;

  const auto add_common = [&](CLI::App* cmd, bool with_diameter) {
    cmd->add_option("--config", config_path, "parameter file (key = value)")
        ->required();
    if (with_diameter)
      cmd->add_option("--diameter", diameter_mm, "column diameter [mm]")
          ->required();
    cmd->add_option("--mu-w", mu_w_override,
                    "override wheel-column friction for this column");
    cmd->add_option("--mu-r", mu_r_override,
                    "override roller-column friction for this column");
    cmd->add_option("--drive-rated-nm", drive_rated,
                    "drive motor rated torque [N*m]");
    cmd->add_option("--drive-rpm", drive_rpm, "drive motor rated speed [RPM]");
    cmd->add_option("--turret-rated-nm", turret_rated,
                    "turret motor rated torque [N*m]");
    cmd->add_option("--turret-rpm", turret_rpm,
                    "turret motor rated speed [RPM]");
  };

  CLI::App* cmd_check =
      app.add_subcommand("check", "synthesize and judge one diameter");
  add_common(cmd_check, true);

  CLI::App* cmd_selflock =
      app.add_subcommand("selflock", "static self-lock report at one diameter");
  add_common(cmd_selflock, true);

  CLI::App* cmd_sweep = app.add_subcommand(
      "sweep", "design curve across a diameter grid, CSV on stdout");
  add_common(cmd_sweep, false);
  std::optional<double> sweep_min_mm, sweep_max_mm, sweep_step_mm;
  std::string out_path;
  cmd_sweep->add_option("--min", sweep_min_mm, "grid start [mm]");
  cmd_sweep->add_option("--max", sweep_max_mm, "grid end [mm]");
  cmd_sweep->add_option("--step", sweep_step_mm, "grid step [mm]");
  cmd_sweep->add_option("--out", out_path, "also write the CSV to this file");

  CLI::App* cmd_motors = app.add_subcommand(
      "motors", "margin report for a motor catalog at one diameter");
  std::string catalog_path;
  double motors_diameter_mm = 220.0;
  cmd_motors->add_option("--config", config_path, "parameter file")->required();
  cmd_motors->add_option("--catalog", catalog_path,
                         "CSV: name,rated_torque_nm,rated_speed_rpm")
      ->required();
  cmd_motors->add_option("--diameter", motors_diameter_mm,
                         "column diameter the requirements are sized at [mm]");

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "run the numerical cross-check suites");
  std::uint64_t seed = 20240901;
  std::uint64_t cases = 1000;
  cmd_verify->add_option("--config", config_path, "parameter file")->required();
  cmd_verify->add_option("--seed", seed, "scenario seed");
  cmd_verify->add_option("--cases", cases, "equilibrium scenario count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const ConfigDocument cfg = load_config(config_path);
    const MotorSpec drive{"drive", drive_rated, drive_rpm};
    const MotorSpec turret{"turret", turret_rated, turret_rpm};

    if (cmd_check->parsed()) {
      const ColumnSpec column =
          make_column(diameter_mm, mu_w_override, mu_r_override);
      const DesignPoint point =
          design_for_diameter(cfg.params, column, drive, turret);
      print_design_point(cfg, point, drive, turret);
      return point.feasible ? 0 : 1;
    }

    if (cmd_selflock->parsed()) {
      const ColumnSpec column =
          make_column(diameter_mm, mu_w_override, mu_r_override);
      const DesignPoint point =
          design_for_diameter(cfg.params, column, drive, turret);
      const StaticsReport& r = point.statics;
      std::cout << "config_fingerprint: " << cfg.fingerprint << "\n"
                << "diameter_mm: " << fmt6(point.d_c * 1e3) << "\n"
                << "links_per_arm: " << point.n << "\n"
                << "tail_weights: " << point.k_tw << "\n"
                << "F_G_N: " << fmt6(r.F_G) << "\n"
                << "N_W_N: " << fmt6(r.N_W) << "\n"
                << "N_R_N: " << fmt6(r.N_R) << "\n"
                << "F_W_N: " << fmt6(r.F_W) << "\n"
                << "F_R_N: " << fmt6(r.F_R) << "\n"
                << "F_B_N: " << fmt6(r.F_B) << "\n"
                << "d1_mm: " << fmt6(r.d_1 * 1e3) << "\n"
                << "d2_mm: " << fmt6(r.d_2 * 1e3) << "\n"
                << "d1_threshold_mm: " << fmt6(r.d1_threshold * 1e3) << "\n"
                << "denominator_sign: " << r.denominator_sign << "\n"
                << "self_lock: " << (r.self_lock_ok ? "ok" : "FAIL") << "\n";
      return r.self_lock_ok ? 0 : 1;
    }

    if (cmd_sweep->parsed()) {
      const double d_min = sweep_min_mm.value_or(cfg.sweep.d_min * 1e3) * 1e-3;
      const double d_max = sweep_max_mm.value_or(cfg.sweep.d_max * 1e3) * 1e-3;
      const double step = sweep_step_mm.value_or(cfg.sweep.step * 1e3) * 1e-3;
      const DesignCurve curve =
          sweep(cfg.params, d_min, d_max, step, drive, turret);
      const std::string csv = curve_csv(curve);
      std::cout << csv;
      if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ConfigError("cannot write: " + out_path);
        out << csv;
      }
      std::cerr << "# config_fingerprint: " << cfg.fingerprint << "\n"
                << "# max_climbable_diameter_mm: "
                << (curve.max_climbable_diameter
                        ? fmt6(*curve.max_climbable_diameter * 1e3)
                        : std::string("none"))
                << "\n# link_additions_mm:";
      for (double d : curve.link_addition_diameters)
        std::cerr << " " << fmt6(d * 1e3);
      std::cerr << "\n# weight_additions_mm:";
      for (std::size_t i = 0; i < curve.weight_addition_diameters.size(); ++i)
        std::cerr << " " << fmt6(curve.weight_addition_diameters[i] * 1e3)
                  << "(" << reason_name(curve.weight_addition_reasons[i]) << ")";
      std::cerr << "\n";
      const bool all_feasible =
          curve.max_climbable_diameter &&
          *curve.max_climbable_diameter == curve.points.back().d_c;
      return all_feasible ? 0 : 1;
    }

    if (cmd_motors->parsed()) {
      const std::vector<MotorSpec> catalog = load_motor_catalog(catalog_path);
      const ColumnSpec column = make_column(motors_diameter_mm, {}, {});
      const DesignPoint point =
          design_for_diameter(cfg.params, column, drive, turret);
      std::cout << "config_fingerprint: " << cfg.fingerprint << "\n"
                << "sizing_diameter_mm: " << fmt6(point.d_c * 1e3) << "\n"
                << "required_drive_nm: " << fmt6(point.tau_required) << "\n"
                << "required_turret_nm: " << fmt6(point.tau_turret) << "\n";
      bool drive_covered = false, turret_covered = false;
      for (const MotorSpec& motor : catalog) {
        const MotorMargin md = motor_margin(point.tau_required, motor);
        const MotorMargin mt = motor_margin(point.tau_turret, motor);
        drive_covered |= md.pass;
        turret_covered |= mt.pass;
        std::cout << "motor: " << motor.name << " rated_nm "
                  << fmt6(motor.rated_torque) << " rated_rpm "
                  << fmt6(motor.rated_speed) << " drive_margin_nm "
                  << fmt6(md.margin) << (md.pass ? " (ok)" : " (short)")
                  << " turret_margin_nm " << fmt6(mt.margin)
                  << (mt.pass ? " (ok)" : " (short)") << " rim_speed_mm_s "
                  << fmt6(climb_speed_estimate(cfg.params, motor.rated_speed) * 1e3)
                  << "\n";
      }
      std::cout << "catalog_covers_drive: " << (drive_covered ? "yes" : "no")
                << "\ncatalog_covers_turret: " << (turret_covered ? "yes" : "no")
                << "\n";
      return drive_covered && turret_covered ? 0 : 1;
    }

    if (cmd_verify->parsed()) {
      const SuiteResult eq = run_equilibrium_suite(seed, cases);
      const SuiteResult quad = run_quadrature_suite(seed, 100);
      std::cout << "config_fingerprint: " << cfg.fingerprint << "\n"
                << "equilibrium_cases: " << eq.cases
                << " worst_rel: " << fmt6(eq.worst)
                << " failures: " << eq.failures << " (tolerance 1e-9)\n"
                << "quadrature_cases: " << quad.cases
                << " worst_rel: " << fmt6(quad.worst)
                << " failures: " << quad.failures << " (tolerance 1e-6)\n";
      return eq.failures == 0 && quad.failures == 0 ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
