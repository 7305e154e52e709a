#pragma once

#include <string_view>

#include "becgrav/condensate.hpp"

// Uniform-gas damping rates. Box-trap rates are taken equal to the uniform
// (periodic) gas values; no overlap-moment correction is applied.

namespace becgrav {

enum class DampingRegime { kLowTemperature, kGeneral, kHighTemperature };

std::string_view to_string(DampingRegime r);

// kB T / mu thresholds for the regime tag.
inline constexpr double kLowTemperatureRatio = 0.2;
inline constexpr double kHighTemperatureRatio = 5.0;
inline constexpr double kDefaultLossRate = 1e-2;  // 1/s

DampingRegime classify_regime(const CondensateParams& params, double temperature);

struct DampingBreakdown {
  double landau = 0.0;
  double beliaev = 0.0;
  double loss = 0.0;
  double total = 0.0;
  DampingRegime regime = DampingRegime::kGeneral;
};

// Full-temperature Landau rate by adaptive quadrature (rel. tol 1e-10).
double landau_rate(const CondensateParams& params, const CondensateSpec& spec, double omega,
                   double temperature);
double landau_low_temperature(const CondensateParams& params, const CondensateSpec& spec,
                              double omega, double temperature);
double landau_high_temperature(const CondensateParams& params, const CondensateSpec& spec,
                               double omega, double temperature);

double beliaev_zero_temperature(const CondensateParams& params, const CondensateSpec& spec,
                                double wavenumber);
double beliaev_rate(const CondensateParams& params, const CondensateSpec& spec, double wavenumber,
                    double temperature);

DampingBreakdown total_rate(const CondensateParams& params, const CondensateSpec& spec, int n,
                            double temperature, double loss_rate = kDefaultLossRate);

// Three-body half-life t = 3 / (2 D rho^2) and its inverse.
double three_body_half_life(double loss_constant, double density);
double three_body_loss_rate(double loss_constant, double density);

}  // namespace becgrav
