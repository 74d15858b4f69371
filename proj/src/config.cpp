#include "climbdesign/config.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "climbdesign/errors.hpp"

namespace climbdesign {

namespace {

enum class Unit { none, millimeter, megapascal, count };

struct KeySpec {
  double RobotParams::* field;
  Unit unit;
  bool required;
  double default_value;  // in file units, used when !required
};

// Sweep keys are handled separately from RobotParams fields.
const std::map<std::string, KeySpec>& key_table() {
  static const std::map<std::string, KeySpec> table = {
      {"m_b", {&RobotParams::m_b, Unit::none, true, 0.0}},
      {"m_t", {&RobotParams::m_t, Unit::none, true, 0.0}},
      {"m_link", {&RobotParams::m_link, Unit::none, true, 0.0}},
      {"m_end", {&RobotParams::m_end, Unit::none, true, 0.0}},
      {"m_tw", {&RobotParams::m_tw, Unit::none, true, 0.0}},
      {"d_b", {&RobotParams::d_b, Unit::millimeter, true, 0.0}},
      {"d_t", {&RobotParams::d_t, Unit::millimeter, true, 0.0}},
      {"l", {&RobotParams::l, Unit::millimeter, true, 0.0}},
      {"w_latch", {&RobotParams::w_latch, Unit::millimeter, true, 0.0}},
      {"w_b", {&RobotParams::w_b, Unit::millimeter, false, 20.0}},
      {"r_w", {&RobotParams::r_w, Unit::millimeter, true, 0.0}},
      {"l_w", {&RobotParams::l_w, Unit::millimeter, true, 0.0}},
      {"E_rubber", {&RobotParams::E_rubber, Unit::megapascal, true, 0.0}},
      {"mu_W", {&RobotParams::mu_W, Unit::none, true, 0.0}},
      {"mu_R", {&RobotParams::mu_R, Unit::none, true, 0.0}},
      {"gamma", {&RobotParams::gamma, Unit::none, true, 0.0}},
      {"a_d", {&RobotParams::a_d, Unit::none, true, 0.0}},
      {"g", {&RobotParams::g, Unit::none, false, 9.81}},
      {"G_dr", {&RobotParams::G_dr, Unit::none, true, 0.0}},
      {"G_turret", {&RobotParams::G_turret, Unit::none, true, 0.0}},
      {"F_B_aggregate", {&RobotParams::F_B_aggregate, Unit::none, false, 0.0}},
      {"c_latch_min", {&RobotParams::c_latch_min, Unit::millimeter, false, 10.0}},
  };
  return table;
}

struct IntKeySpec {
  int RobotParams::* field;
  int default_value;
};

const std::map<std::string, IntKeySpec>& int_key_table() {
  static const std::map<std::string, IntKeySpec> table = {
      {"n_min", {&RobotParams::n_min, 2}},
      {"k_tw_max", {&RobotParams::k_tw_max, 8}},
  };
  return table;
}

struct SweepKeySpec {
  double SweepDefaults::* field;
  double default_mm;
};

const std::map<std::string, SweepKeySpec>& sweep_key_table() {
  static const std::map<std::string, SweepKeySpec> table = {
      {"sweep_min", {&SweepDefaults::d_min, 60.0}},
      {"sweep_max", {&SweepDefaults::d_max, 400.0}},
      {"sweep_step", {&SweepDefaults::step, 5.0}},
  };
  return table;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view value, int line_no) {
  const std::string buf(value);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty() || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << "line " << line_no << ": '" << buf << "' is not a finite number";
    throw ConfigError(msg.str());
  }
  return v;
}

double to_si(double v, Unit unit) {
  switch (unit) {
    case Unit::millimeter: return v * 1e-3;
    case Unit::megapascal: return v * 1e6;
    default: return v;
  }
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x00000100000001B3ULL;
  }
  return h;
}

}  // namespace

ConfigDocument parse_config(std::string_view text) {
  std::map<std::string, double> seen;  // key -> SI value

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      std::ostringstream msg;
      msg << "line " << line_no << ": expected 'key = value'";
      throw ConfigError(msg.str());
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));

    const bool known = key_table().count(key) || int_key_table().count(key) ||
                       sweep_key_table().count(key);
    if (!known) {
      std::ostringstream msg;
      msg << "line " << line_no << ": unknown key '" << key << "'";
      throw ConfigError(msg.str());
    }
    if (seen.count(key)) {
      std::ostringstream msg;
      msg << "line " << line_no << ": duplicate key '" << key << "'";
      throw ConfigError(msg.str());
    }

    const double raw = parse_number(value, line_no);
    if (int_key_table().count(key)) {
      if (raw != std::floor(raw)) {
        std::ostringstream msg;
        msg << "line " << line_no << ": '" << key << "' must be an integer";
        throw ConfigError(msg.str());
      }
      seen[key] = raw;
    } else if (sweep_key_table().count(key)) {
      seen[key] = to_si(raw, Unit::millimeter);
    } else {
      seen[key] = to_si(raw, key_table().at(key).unit);
    }
  }

  // Collect every missing required key into one report.
  std::vector<std::string> missing;
  for (const auto& [key, spec] : key_table())
    if (spec.required && !seen.count(key)) missing.push_back(key);
  if (!missing.empty()) {
    std::ostringstream msg;
    msg << "missing required keys:";
    for (const std::string& key : missing) msg << " " << key;
    throw ConfigError(msg.str());
  }

  ConfigDocument doc;
  for (const auto& [key, spec] : key_table()) {
    const double v = seen.count(key)
                         ? seen.at(key)
                         : to_si(spec.default_value, spec.unit);
    doc.params.*(spec.field) = v;
    seen[key] = v;
  }
  for (const auto& [key, spec] : int_key_table()) {
    const double v =
        seen.count(key) ? seen.at(key) : static_cast<double>(spec.default_value);
    doc.params.*(spec.field) = static_cast<int>(v);
    seen[key] = v;
  }
  for (const auto& [key, spec] : sweep_key_table()) {
    const double v = seen.count(key) ? seen.at(key) : spec.default_mm * 1e-3;
    doc.sweep.*(spec.field) = v;
    seen[key] = v;
  }

  doc.params.validate();

  // Fingerprint over the normalized (defaults applied, SI units) key set, so
  // equivalent configs hash identically regardless of formatting.
  std::ostringstream normalized;
  for (const auto& [key, value] : seen) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    normalized << key << "=" << buf << "\n";
  }
  char fp[32];
  std::snprintf(fp, sizeof(fp), "%016llx",
                static_cast<unsigned long long>(fnv1a(normalized.str())));
  doc.fingerprint = fp;
  return doc;
}

ConfigDocument load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::vector<MotorSpec> load_motor_catalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open motor catalog: " + path);

  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) throw ConfigError("motor catalog is empty");
  ++line_no;
  if (std::string_view header = trim(line);
      header != "name,rated_torque_nm,rated_speed_rpm") {
    std::ostringstream msg;
    msg << "line 1: catalog header must be "
           "'name,rated_torque_nm,rated_speed_rpm', got '"
        << header << "'";
    throw ConfigError(msg.str());
  }

  std::vector<MotorSpec> motors;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    const std::size_t c1 = row.find(',');
    const std::size_t c2 = c1 == std::string_view::npos
                               ? std::string_view::npos
                               : row.find(',', c1 + 1);
    if (c2 == std::string_view::npos) {
      std::ostringstream msg;
      msg << "line " << line_no << ": expected 'name,torque,speed'";
      throw ConfigError(msg.str());
    }
    MotorSpec motor;
    motor.name = std::string(trim(row.substr(0, c1)));
    motor.rated_torque = parse_number(trim(row.substr(c1 + 1, c2 - c1 - 1)), line_no);
    motor.rated_speed = parse_number(trim(row.substr(c2 + 1)), line_no);
    motor.validate();
    motors.push_back(std::move(motor));
  }
  if (motors.empty()) throw ConfigError("motor catalog has no rows");
  return motors;
}

}  // namespace climbdesign
