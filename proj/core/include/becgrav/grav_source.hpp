#pragma once

#include <optional>

#include "becgrav/constants.hpp"

namespace becgrav {

// Oscillating source sphere on the +x axis of the trap.
struct SourceSphere {
  double mass = 0.0;                                // kg
  double density = constants::kSourceDensity;       // kg/m^3
  std::optional<double> radius_override;            // m, replaces the density route
  double r_min = 0.0;                               // m, surface to trap-end gap
  double stroke = 0.0;                              // m, delta_R
  double omega = 0.0;                               // rad/s
  double phase = 0.0;                               // rad

  double radius() const;
  void validate() const;
};

struct FieldCoefficients {
  double phi0 = 0.0;      // m^2/s^2
  double accel = 0.0;     // m/s^2
  double gradient = 0.0;  // 1/s^2
};

struct FieldAmplitudes {
  double phi0_osc = 0.0;      // m^2/s^2
  double accel_osc = 0.0;     // m/s^2
  double gradient_osc = 0.0;  // 1/s^2
};

// Above this stroke ratio the first-order expansion in delta_R/R0 is strained.
inline constexpr double kStrokeRatioWarning = 0.15;

double sphere_radius(double mass, double density);

// R0 = r + R_min + L/2 + delta_R
double equilibrium_distance(const SourceSphere& sphere, double box_length);

FieldCoefficients static_coefficients(double mass, double distance);

FieldAmplitudes oscillation_amplitudes(const SourceSphere& sphere, double r0);

// Instantaneous sphere-centre distance R(t) = R0 + delta_R sin(Omega t + phi).
double source_distance(const SourceSphere& sphere, double r0, double t);

// -MG / (R(t) - x); exact on-axis potential used to check the expansion.
double exact_axial_potential(double x, double t, const SourceSphere& sphere, double r0);

double stroke_ratio(const SourceSphere& sphere, double r0);
bool linearization_strained(const SourceSphere& sphere, double r0);

}  // namespace becgrav
