#include <cmath>
#include <numbers>

#include "doctest.h"

#include "becgrav/constants.hpp"
#include "becgrav/errors.hpp"
#include "becgrav/grav_source.hpp"
#include "oracles.hpp"

using namespace becgrav;
using constants::kG;

namespace {

SourceSphere big_sphere() {
  SourceSphere s;
  s.mass = 0.2;
  s.r_min = 1e-3;
  s.stroke = 2e-3;
  s.omega = 2.0 * std::numbers::pi * 1.5;
  return s;
}

// Root of (4/3) pi r^3 rho - M by bisection.
double bisect_radius(double mass, double density) {
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (4.0 / 3.0 * std::numbers::pi * mid * mid * mid * density > mass ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("sphere radius") {
  CHECK(sphere_radius(0.2, 19300.0) == doctest::Approx(0.0135).epsilon(0.05));
  CHECK(sphere_radius(0.2, 19300.0) == doctest::Approx(bisect_radius(0.2, 19300.0)).epsilon(1e-12));
  CHECK(sphere_radius(19300.0 * 4.0 / 3.0 * std::numbers::pi, 19300.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(sphere_radius(0.0, 19300.0), DomainError);
  CHECK_THROWS_AS(sphere_radius(1.0, -1.0), DomainError);
}

TEST_CASE("equilibrium distance") {
  const double r0 = equilibrium_distance(big_sphere(), 200e-6);
  CHECK(r0 == doctest::Approx(0.017).epsilon(0.05));
  SourceSphere bare;
  bare.mass = 1.0;
  bare.radius_override = 0.0;
  bare.r_min = 5e-3;
  bare.omega = 1.0;
  CHECK(equilibrium_distance(bare, 0.0) == doctest::Approx(5e-3).epsilon(1e-15));
}

TEST_CASE("static coefficients") {
  const FieldCoefficients c = static_coefficients(0.2, 0.017);
  CHECK(c.phi0 < 0.0);
  CHECK(c.accel > 0.0);
  CHECK(c.gradient > 0.0);
  CHECK(c.gradient * 0.017 == doctest::Approx(2.0 * c.accel).epsilon(1e-14));

  // Finite differences of the exact potential with the sphere at rest.
  SourceSphere s = big_sphere();
  s.stroke = 0.0;
  const double h = 1e-5;
  const double pm = exact_axial_potential(-h, 0.0, s, 0.017);
  const double p0 = exact_axial_potential(0.0, 0.0, s, 0.017);
  const double pp = exact_axial_potential(h, 0.0, s, 0.017);
  CHECK(c.phi0 == doctest::Approx(p0).epsilon(1e-14));
  CHECK(c.accel == doctest::Approx(-(pp - pm) / (2.0 * h)).epsilon(1e-6));
  CHECK(c.gradient == doctest::Approx(-(pp - 2.0 * p0 + pm) / (h * h)).epsilon(1e-5));
  CHECK(c.accel == doctest::Approx(4.6e-8).epsilon(0.02));
  CHECK(c.gradient == doctest::Approx(5.4e-6).epsilon(0.02));

  const FieldCoefficients far = static_coefficients(0.2, 1e9);
  CHECK(std::abs(far.accel) < 1e-28);
  CHECK_THROWS_AS(static_coefficients(0.2, 0.0), DomainError);
}

TEST_CASE("oscillation amplitudes") {
  const SourceSphere s = big_sphere();
  const double r0 = equilibrium_distance(s, 200e-6);
  const FieldAmplitudes a = oscillation_amplitudes(s, r0);
  CHECK(a.accel_osc == doctest::Approx(2.0 * s.mass * kG * s.stroke / std::pow(r0, 3)).epsilon(1e-14));
  CHECK(a.gradient_osc == doctest::Approx(6.0 * s.mass * kG * s.stroke / std::pow(r0, 4)).epsilon(1e-14));
  CHECK(a.phi0_osc == doctest::Approx(s.mass * kG * s.stroke / (r0 * r0)).epsilon(1e-14));
  CHECK(a.accel_osc > 2e-9);
  CHECK(a.accel_osc < 2e-7);
  CHECK(a.gradient_osc > 2e-7);
  CHECK(a.gradient_osc < 2e-5);

  const FieldAmplitudes twice = oscillation_amplitudes(s, 2.0 * r0);
  CHECK(twice.accel_osc / a.accel_osc == doctest::Approx(0.125).epsilon(1e-14));

  SourceSphere still = s;
  still.stroke = 0.0;
  const FieldAmplitudes zero = oscillation_amplitudes(still, r0);
  CHECK(zero.accel_osc == 0.0);
  CHECK(zero.gradient_osc == 0.0);
  CHECK(zero.phi0_osc == 0.0);
}

TEST_CASE("first-order amplitudes against a fit of the exact field") {
  for (double mass : {0.2, 2e-4}) {
    SourceSphere s = big_sphere();
    s.mass = mass;
    if (mass < 1e-3) {
      s.r_min = 1e-4;
      s.stroke = 2e-4;
    }
    const double r0 = equilibrium_distance(s, 200e-6);
    const FieldAmplitudes a = oscillation_amplitudes(s, r0);
    const oracle::SourceFit fit = oracle::fit_source_amplitudes(s, r0);
    const double band = 2.0 * stroke_ratio(s, r0);
    CHECK(std::abs(fit.accel / a.accel_osc - 1.0) <= band);
    CHECK(std::abs(fit.gradient / a.gradient_osc - 1.0) <= band);
  }
}

TEST_CASE("quadratic model error over the box") {
  const SourceSphere s = big_sphere();
  const double r0 = 0.017;
  const FieldCoefficients c = static_coefficients(s.mass, r0);
  SourceSphere still = s;
  still.stroke = 0.0;
  const double half = 100e-6;
  const double bound = std::pow(half / r0, 3);
  for (int i = -10; i <= 10; ++i) {
    const double x = half * i / 10.0;
    const double exact = exact_axial_potential(x, 0.0, still, r0);
    const double model = c.phi0 - c.accel * x - 0.5 * c.gradient * x * x;
    CHECK(std::abs(model - exact) / std::abs(exact) <= 1.01 * bound);
  }
}

TEST_CASE("stroke ratio flags") {
  SourceSphere s = big_sphere();
  const double r0 = equilibrium_distance(s, 200e-6);
  CHECK(stroke_ratio(s, r0) == doctest::Approx(s.stroke / r0));
  CHECK_FALSE(linearization_strained(s, r0));
  s.stroke = 0.2 * r0;
  CHECK(linearization_strained(s, r0));
}

TEST_CASE("exact potential guards the sphere interior") {
  const SourceSphere s = big_sphere();
  const double r0 = equilibrium_distance(s, 200e-6);
  CHECK(exact_axial_potential(0.0, 0.0, s, r0) == doctest::Approx(-s.mass * kG / r0));
  CHECK_THROWS_AS(exact_axial_potential(r0, 0.0, s, r0), DomainError);
}
