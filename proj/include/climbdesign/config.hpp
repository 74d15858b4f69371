#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "climbdesign/params.hpp"

namespace climbdesign {

/// Sweep grid defaults carried by the config file, in meters.
struct SweepDefaults {
  double d_min = 0.060;
  double d_max = 0.400;
  double step = 0.005;
};

/// A parsed and validated configuration. The file format is one
/// `key = value` pair per line with `#` comments; lengths are given in mm
/// and the rubber modulus in MPa, converted to SI on ingestion.
struct ConfigDocument {
  RobotParams params;
  SweepDefaults sweep;
  std::string fingerprint;  ///< 16-hex-digit hash of the normalized key set
};

/// Parses config text. Unknown keys, duplicate keys, malformed values and
/// missing keys without documented defaults are hard errors (ConfigError with
/// the offending line number; missing keys are reported all at once).
ConfigDocument parse_config(std::string_view text);

/// parse_config over the contents of a file.
ConfigDocument load_config(const std::string& path);

/// Reads a motor catalog CSV with the exact header
/// `name,rated_torque_nm,rated_speed_rpm`. Every row is validated.
std::vector<MotorSpec> load_motor_catalog(const std::string& path);

}  // namespace climbdesign
