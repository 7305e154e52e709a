#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "becgrav/planner.hpp"

// Run configuration files: "[section]" headers and "key = value unit" lines,
// '#' comments. Dimensional values must carry a unit; unknown sections and
// keys are rejected.

namespace becgrav {

struct SimulateConfig {
  std::vector<int> modes{1};
  double t_end = 10.0;                  // s
  std::optional<double> step;           // s, automatic otherwise
  int sample_every = 100;
  std::vector<double> damping;          // 1/s; empty -> computed rates
  std::vector<double> initial_g;
  std::vector<double> initial_gdot;     // 1/s
  std::optional<double> drive_omega;    // rad/s
  std::optional<int> drive_multiple;    // Omega = k omega_1
  double phase = 0.0;
  bool direct = true;
  bool parametric = true;
  bool coupling = true;
};

struct RunConfig {
  std::string origin;
  PlanRequest request;
  bool has_source = false;
  bool has_species = false;
  std::optional<SweepAxis> sweep;
  bool has_simulate = false;
  SimulateConfig simulate;
  int damping_modes = 5;
};

// Throws ConfigError naming the file, line, section and key.
RunConfig parse_config(std::istream& in, const std::string& origin = "<config>");
RunConfig load_config(const std::string& path);

// Condensate described by the [condensate] / [plan] sections; L falls back to
// the scheme default.
CondensateSpec condensate_from(const RunConfig& config);

// Unit conversion used by the parser; exposed for tests.
enum class Dimension {
  kCount,
  kMass,
  kLength,
  kArea,
  kNumberDensity,
  kMassDensity,
  kTemperature,
  kTime,
  kFrequency,  // angular, Hz converted with 2 pi
  kRate,
  kAcceleration,
  kGradient,
  kAngle,
  kLossConstant,  // m^6/s
};

std::string_view to_string(Dimension d);
// Scale factor to SI for unit in dimension d; nullopt if the unit does not belong.
std::optional<double> unit_scale(Dimension d, std::string_view unit);

}  // namespace becgrav
