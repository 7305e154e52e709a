#include "becgrav/grav_source.hpp"

#include <cmath>
#include <sstream>

#include "becgrav/errors.hpp"

namespace becgrav {

using constants::kG;
using constants::kPi;

double SourceSphere::radius() const {
  if (radius_override) return *radius_override;
  return sphere_radius(mass, density);
}

void SourceSphere::validate() const {
  if (!(mass > 0.0)) throw DomainError("source: mass must be positive");
  if (radius_override) {
    if (!(*radius_override >= 0.0)) throw DomainError("source: radius must be non-negative");
  } else if (!(density > 0.0)) {
    throw DomainError("source: density must be positive");
  }
  if (!(r_min >= 0.0)) throw DomainError("source: R_min must be non-negative");
  if (!(stroke >= 0.0)) throw DomainError("source: stroke must be non-negative");
  if (!(omega > 0.0)) throw DomainError("source: drive frequency must be positive");
}

double sphere_radius(double mass, double density) {
  if (!(mass > 0.0) || !(density > 0.0)) {
    throw DomainError("sphere_radius: mass and density must be positive");
  }
  return std::cbrt(3.0 * mass / (4.0 * kPi * density));
}

double equilibrium_distance(const SourceSphere& sphere, double box_length) {
  if (!(box_length >= 0.0)) throw DomainError("equilibrium_distance: L must be non-negative");
  if (!(sphere.r_min >= 0.0) || !(sphere.stroke >= 0.0)) {
    throw DomainError("equilibrium_distance: lengths must be non-negative");
  }
  return sphere.radius() + sphere.r_min + 0.5 * box_length + sphere.stroke;
}

FieldCoefficients static_coefficients(double mass, double distance) {
  if (!(distance > 0.0)) throw DomainError("static_coefficients: R must be positive");
  if (!(mass > 0.0)) throw DomainError("static_coefficients: M must be positive");
  const double gm = mass * kG;
  return {-gm / distance, gm / (distance * distance),
          2.0 * gm / (distance * distance * distance)};
}

FieldAmplitudes oscillation_amplitudes(const SourceSphere& sphere, double r0) {
  if (!(r0 > 0.0)) throw DomainError("oscillation_amplitudes: R0 must be positive");
  const double gmd = sphere.mass * kG * sphere.stroke;
  const double r2 = r0 * r0;
  return {gmd / r2, 2.0 * gmd / (r2 * r0), 6.0 * gmd / (r2 * r2)};
}

double source_distance(const SourceSphere& sphere, double r0, double t) {
  return r0 + sphere.stroke * std::sin(sphere.omega * t + sphere.phase);
}

double exact_axial_potential(double x, double t, const SourceSphere& sphere, double r0) {
  const double r = source_distance(sphere, r0, t);
  if (x >= r - sphere.radius()) {
    std::ostringstream msg;
    msg << "exact_axial_potential: x = " << x << " m lies inside the sphere (centre at "
        << r << " m)";
    throw DomainError(msg.str());
  }
  return -sphere.mass * kG / (r - x);
}

double stroke_ratio(const SourceSphere& sphere, double r0) {
  if (!(r0 > 0.0)) throw DomainError("stroke_ratio: R0 must be positive");
  return sphere.stroke / r0;
}

bool linearization_strained(const SourceSphere& sphere, double r0) {
  return stroke_ratio(sphere, r0) > kStrokeRatioWarning;
}

}  // namespace becgrav
