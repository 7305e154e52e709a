#include "becgrav/damping.hpp"

#include <cmath>

#include "becgrav/constants.hpp"
#include "becgrav/errors.hpp"
#include "becgrav/quadrature.hpp"

namespace becgrav {

using constants::kBoltzmann;
using constants::kHbar;
using constants::kPi;

namespace {

void require_temperature(double temperature) {
  if (!(temperature >= 0.0)) throw DomainError("damping: temperature must be >= 0");
}

// (e^x - e^-x)^-2 drops below 1e-16 here.
const double kLandauCutoff = std::asinh(0.5e8);

// (e^x - e^-x)^-2 (1 - 1/2u - 1/2u^2)^2 with u = sqrt(1 + 4 tau^2 x^2),
// rewritten so that small x does not cancel.
double landau_integrand(double x, double tau) {
  if (x == 0.0) return 0.0;
  const double q = 4.0 * tau * tau * x * x;
  const double u = std::sqrt(1.0 + q);
  // 1 - 1/2u - 1/2u^2 = (2u + 1)(u - 1) / 2u^2 and u - 1 = q / (u + 1)
  const double bracket_over_x2 = (2.0 * u + 1.0) * 4.0 * tau * tau / ((u + 1.0) * 2.0 * u * u);
  const double xs = x / std::sinh(x);
  return 0.25 * xs * xs * x * x * bracket_over_x2 * bracket_over_x2;
}

}  // namespace

std::string_view to_string(DampingRegime r) {
  switch (r) {
    case DampingRegime::kLowTemperature: return "low-T";
    case DampingRegime::kGeneral: return "general";
    case DampingRegime::kHighTemperature: return "high-T";
  }
  return "?";
}

DampingRegime classify_regime(const CondensateParams& params, double temperature) {
  const double tau = kBoltzmann * temperature / params.chemical_potential;
  if (tau < kLowTemperatureRatio) return DampingRegime::kLowTemperature;
  if (tau > kHighTemperatureRatio) return DampingRegime::kHighTemperature;
  return DampingRegime::kGeneral;
}

double landau_rate(const CondensateParams& params, const CondensateSpec& spec, double omega,
                   double temperature) {
  require_temperature(temperature);
  if (temperature == 0.0) return 0.0;
  const double tau = kBoltzmann * temperature / params.chemical_potential;
  quad::Options opts;
  opts.rel_tol = 1e-10;
  opts.max_intervals = 4000;
  const quad::Result r =
      quad::integrate([tau](double x) { return landau_integrand(x, tau); }, 0.0, kLandauCutoff, opts);
  const double m = spec.species.mass;
  return m * params.sound_speed * spec.species.interaction * omega / (2.0 * kPi * kHbar) * r.value;
}

double landau_low_temperature(const CondensateParams& params, const CondensateSpec& spec,
                              double omega, double temperature) {
  require_temperature(temperature);
  const double kt = kBoltzmann * temperature;
  const double c = params.sound_speed;
  const double c5 = c * c * c * c * c;
  return 3.0 * kPi * kPi * kPi / 40.0 * kt * kt * kt * kt * omega /
         (spec.species.mass * spec.density * kHbar * kHbar * kHbar * c5);
}

double landau_high_temperature(const CondensateParams& params, const CondensateSpec& spec,
                               double omega, double temperature) {
  require_temperature(temperature);
  return 3.0 / 64.0 * spec.species.interaction * kBoltzmann * temperature * omega /
         (kHbar * params.sound_speed);
}

double beliaev_zero_temperature(const CondensateParams& /*params*/, const CondensateSpec& spec,
                                double wavenumber) {
  const double k = wavenumber;
  return 3.0 / (640.0 * kPi) * kHbar * k * k * k * k * k / (spec.species.mass * spec.density);
}

double beliaev_rate(const CondensateParams& params, const CondensateSpec& spec, double wavenumber,
                    double temperature) {
  require_temperature(temperature);
  const double g0 = beliaev_zero_temperature(params, spec, wavenumber);
  if (temperature == 0.0) return g0;
  const double beta = params.sound_speed * kHbar * wavenumber / (kBoltzmann * temperature);
  auto f = [beta](double x) {
    if (x == 0.0) return 0.0;
    const double y = x * (x - 1.0);
    return y * y / std::expm1(x * beta);
  };
  quad::Options opts;
  opts.rel_tol = 1e-10;
  const double integral = quad::integrate(f, 0.0, 1.0, opts).value;
  return g0 * (1.0 + 60.0 * integral);
}

DampingBreakdown total_rate(const CondensateParams& params, const CondensateSpec& spec, int n,
                            double temperature, double loss_rate) {
  if (!(loss_rate >= 0.0)) throw DomainError("total_rate: loss rate must be >= 0");
  const double k = mode_wavenumber(spec.length, n);
  const double omega = params.sound_speed * k;
  DampingBreakdown b;
  b.landau = landau_rate(params, spec, omega, temperature);
  b.beliaev = beliaev_rate(params, spec, k, temperature);
  b.loss = loss_rate;
  b.total = b.landau + b.beliaev + b.loss;
  b.regime = classify_regime(params, temperature);
  return b;
}

double three_body_half_life(double loss_constant, double density) {
  if (!(loss_constant > 0.0) || !(density > 0.0)) {
    throw DomainError("three_body_half_life: loss constant and density must be positive");
  }
  return 3.0 / (2.0 * loss_constant * density * density);
}

double three_body_loss_rate(double loss_constant, double density) {
  return 1.0 / three_body_half_life(loss_constant, density);
}

}  // namespace becgrav
