#include "becgrav/quantum_channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "becgrav/constants.hpp"
#include "becgrav/errors.hpp"
#include "becgrav/mode_dynamics.hpp"
#include "becgrav/quadrature.hpp"

namespace becgrav {

using constants::kHbar;
using constants::kPi;
using constants::kSqrt2;

double ModeFunctions::phi(double x) const { return std::cos(wavenumber * (x + 0.5 * length)); }

ModeFunctions mode_functions(const CondensateSpec& spec, const CondensateParams& params, int n) {
  ModeFunctions f;
  f.n = n;
  f.length = spec.length;
  f.wavenumber = mode_wavenumber(spec.length, n);
  const double s = 1.0 / (kSqrt2 * params.healing_length * f.wavenumber);
  if (s < 1.0) {
    std::ostringstream msg;
    msg << "mode_functions: mode " << n << " outside the phonon regime ((sqrt2 zeta k)^-1 = " << s
        << " < 1)";
    throw DomainError(msg.str());
  }
  const double norm = 1.0 / std::sqrt(spec.length * spec.resolved_cross_section());
  f.alpha = std::sqrt(s + 1.0) * norm;
  f.beta = -std::sqrt(s - 1.0) * norm;
  return f;
}

double displacement_amplitude_closed(const CondensateSpec& spec, const CondensateParams& params,
                                     const FieldAmplitudes& ampl, int n) {
  if (n < 1) throw DomainError("amplitudes: mode index must be >= 1");
  const double q = kSqrt2 * n * kPi;
  return spec.species.mass * std::pow(spec.length, 1.5) *
         std::sqrt(spec.resolved_atom_number() * params.healing_length / (q * q * q)) *
         parity_drive(ampl, spec.length, n);
}

double squeeze_amplitude_closed(const CondensateSpec& spec, const CondensateParams& params,
                                const FieldAmplitudes& ampl, int n) {
  if (n < 1) throw DomainError("amplitudes: mode index must be >= 1");
  const double L = spec.length;
  return spec.species.mass * ampl.gradient_osc * L * L * L /
         (16.0 * kSqrt2 * n * n * n * kPi * kPi * kPi * params.healing_length);
}

double pair_amplitude_closed(const CondensateSpec& spec, const CondensateParams& params,
                             const FieldAmplitudes& ampl, int n, int l) {
  if (n < 1 || l < 1) throw DomainError("amplitudes: mode indices must be >= 1");
  if (l == n) return squeeze_amplitude_closed(spec, params, ampl, n);
  const double L = spec.length;
  const double sum = double(l) * l + double(n) * n;
  const double diff = double(l) * l - double(n) * n;
  return -spec.species.mass * L * L * L * sum /
         (2.0 * std::sqrt(2.0 * n * l) * diff * diff * kPi * kPi * kPi * params.healing_length) *
         parity_drive(ampl, L, l + n);
}

TransitionAmplitudes amplitudes_closed(const CondensateSpec& spec, const CondensateParams& params,
                                       const FieldAmplitudes& ampl, int n, int l) {
  TransitionAmplitudes a;
  a.n = n;
  a.l = l;
  a.displacement = displacement_amplitude_closed(spec, params, ampl, n);
  a.squeeze = squeeze_amplitude_closed(spec, params, ampl, n);
  a.pair = pair_amplitude_closed(spec, params, ampl, n, l);
  a.mix_a = -a.pair;
  a.mix_b = -a.pair;
  return a;
}

TransitionAmplitudes amplitudes_exact(const CondensateSpec& spec, const CondensateParams& params,
                                      const FieldAmplitudes& ampl, int n, int l) {
  const ModeFunctions fn = mode_functions(spec, params, n);
  const ModeFunctions fl = mode_functions(spec, params, l);
  const double m = spec.species.mass;
  const double L = spec.length;
  const double area = spec.resolved_cross_section();
  const double na = spec.resolved_atom_number();
  const double dmu = m * (ampl.phi0_osc + ampl.gradient_osc * L * L / 24.0);
  auto dv = [&](double x) {
    return m * (ampl.phi0_osc + ampl.accel_osc * x + ampl.gradient_osc * x * x / 2.0) - dmu;
  };
  // Parity-forbidden integrals vanish; the absolute floor is set by the
  // integral of |g| so roundoff does not stall refinement.
  auto integrate = [&](auto&& g) {
    quad::Options opts;
    opts.rel_tol = 1e-12;
    opts.abs_tol = 1e-13 * quad::integral([&](double x) { return std::abs(g(x)); }, -L / 2.0,
                                          L / 2.0, 1e-6);
    return quad::integrate(g, -L / 2.0, L / 2.0, opts).value;
  };

  TransitionAmplitudes a;
  a.n = n;
  a.l = l;
  a.displacement = -0.5 * std::sqrt(na * area / L) *
                   integrate([&](double x) { return dv(x) * (fn.u(x) + fn.v(x)); });
  a.squeeze = -0.5 * area * integrate([&](double x) { return dv(x) * fn.u(x) * fn.v(x); });
  a.pair = -0.5 * area * integrate([&](double x) { return dv(x) * fl.u(x) * fn.v(x); });
  a.mix_a = -0.5 * area * integrate([&](double x) { return dv(x) * fl.u(x) * fn.u(x); });
  a.mix_b = -0.5 * area * integrate([&](double x) { return dv(x) * fl.v(x) * fn.v(x); });
  return a;
}

double resonance_ratio(const CondensateSpec& spec, const CondensateParams& params,
                       double drive_omega) {
  if (!(drive_omega > 0.0)) throw DomainError("resonant_index: Omega must be positive");
  return spec.length * drive_omega / (kPi * params.sound_speed);
}

int resonant_index(const CondensateSpec& spec, const CondensateParams& params, double drive_omega,
                   double rel_tol) {
  const double ratio = resonance_ratio(spec, params, drive_omega);
  const double nearest = std::round(ratio);
  if (nearest < 1.0 || std::abs(ratio - nearest) > rel_tol * ratio) {
    std::ostringstream msg;
    msg << "resonant_index: L Omega / (pi c0) = " << ratio << " is not an integer (nearest "
        << std::floor(ratio) << " and " << std::ceil(ratio) << ")";
    throw ResonanceError(msg.str());
  }
  return static_cast<int>(nearest);
}

ResonantChannels resonant_channels(int n_omega, int max_mode) {
  if (n_omega < 1) throw DomainError("resonant_channels: n_Omega must be >= 1");
  ResonantChannels c;
  c.n_omega = n_omega;
  if (n_omega <= max_mode) c.displacement = n_omega;
  if (n_omega % 2 == 0 && n_omega / 2 <= max_mode) c.single_squeeze = n_omega / 2;
  for (int l = 1; 2 * l < n_omega; ++l) {
    if (n_omega - l <= max_mode) c.pairs.emplace_back(l, n_omega - l);
  }
  for (int l = n_omega + 1; l <= max_mode; ++l) c.mixing.emplace_back(l, l - n_omega);
  return c;
}

ChannelParameters channel_parameters(const TransitionAmplitudes& amps, double t) {
  if (!(t >= 0.0)) throw DomainError("channel_parameters: t must be >= 0");
  ChannelParameters p;
  p.displacement = std::abs(amps.displacement) * t / kHbar;
  p.squeeze = 2.0 * std::abs(amps.squeeze) * t / kHbar;
  p.pair = 2.0 * std::abs(amps.pair) * t / kHbar;
  p.mixing = 2.0 * std::abs(amps.mix_a) * t / kHbar;
  return p;
}

double displaced_squeezed_number(std::complex<double> alpha, double r0, double theta0, double r) {
  const std::complex<double> sq =
      std::cosh(r0) * std::sinh(r) + std::polar(1.0, theta0) * std::sinh(r0) * std::cosh(r);
  return std::norm(sq) + displaced_squeezed_coherent(alpha, r);
}

double displaced_squeezed_coherent(std::complex<double> alpha, double r) {
  return std::norm(std::conj(alpha) * std::cosh(r) - alpha * std::sinh(r));
}

TwoModeNumbers two_mode_numbers(double initial, double r, double initial_coherent) {
  const double s2 = std::sinh(r) * std::sinh(r);
  return {initial + (initial + 1.0) * s2, (initial + 1.0) * s2, initial_coherent * s2};
}

double mode_mix_number(double initial, double theta_minus, double theta_plus) {
  const double c = std::cos(std::hypot(theta_minus, theta_plus));
  return initial * c * c;
}

double mode_mix_number_leading_order(double initial, double theta_minus, double theta_plus) {
  return initial * (1.0 - (theta_minus * theta_minus + theta_plus * theta_plus));
}

namespace {

int slot_of(const std::vector<int>& slot_modes, int mode) {
  const auto it = std::find(slot_modes.begin(), slot_modes.end(), mode);
  return it == slot_modes.end() ? -1 : static_cast<int>(it - slot_modes.begin());
}

double sign_angle(double value) { return value < 0.0 ? kPi : 0.0; }

}  // namespace

std::vector<ChannelOp> resonant_operations(const CondensateSpec& spec,
                                           const CondensateParams& params,
                                           const FieldAmplitudes& ampl, int n_omega,
                                           const std::vector<int>& slot_modes, double t) {
  const int max_mode = slot_modes.empty() ? 0 : *std::max_element(slot_modes.begin(), slot_modes.end());
  const ResonantChannels ch = resonant_channels(n_omega, max_mode);
  const double parity_angle = (n_omega % 2 == 1) ? kPi : 0.0;
  std::vector<ChannelOp> ops;
  if (ch.displacement) {
    const int s = slot_of(slot_modes, *ch.displacement);
    if (s >= 0) {
      const double m0n = displacement_amplitude_closed(spec, params, ampl, *ch.displacement);
      ops.push_back({ChannelOp::Kind::kDisplacement, s, s, m0n * t / kHbar, 0.0});
    }
  }
  if (ch.single_squeeze) {
    const int s = slot_of(slot_modes, *ch.single_squeeze);
    if (s >= 0) {
      const double mnn = squeeze_amplitude_closed(spec, params, ampl, *ch.single_squeeze);
      ops.push_back({ChannelOp::Kind::kSqueeze, s, s, 2.0 * std::abs(mnn) * t / kHbar,
                     sign_angle(mnn)});
    }
  }
  for (auto [l, n] : ch.pairs) {
    const int sl = slot_of(slot_modes, l);
    const int sn = slot_of(slot_modes, n);
    if (sl < 0 || sn < 0) continue;
    const double mln = pair_amplitude_closed(spec, params, ampl, n, l);
    ops.push_back({ChannelOp::Kind::kTwoModeSqueeze, sl, sn, 2.0 * std::abs(mln) * t / kHbar,
                   sign_angle(mln) + parity_angle});
  }
  for (auto [l, n] : ch.mixing) {
    const int sl = slot_of(slot_modes, l);
    const int sn = slot_of(slot_modes, n);
    if (sl < 0 || sn < 0) continue;
    const double theta = -2.0 * pair_amplitude_closed(spec, params, ampl, n, l) * t / kHbar;
    ops.push_back({ChannelOp::Kind::kBeamsplitter, sl, sn,
                   (n_omega % 2 == 1) ? -theta : theta, 0.0});
  }
  return ops;
}

void apply_channel(GaussianState& state, const ChannelOp& op, double fraction) {
  switch (op.kind) {
    case ChannelOp::Kind::kDisplacement:
      state.displace(op.slot_a, {op.parameter * fraction, 0.0});
      break;
    case ChannelOp::Kind::kSqueeze:
      state.squeeze(op.slot_a, op.parameter * fraction, op.angle);
      break;
    case ChannelOp::Kind::kTwoModeSqueeze:
      state.two_mode_squeeze(op.slot_a, op.slot_b, op.parameter * fraction, op.angle);
      break;
    case ChannelOp::Kind::kBeamsplitter:
      state.beamsplitter(op.slot_a, op.slot_b, op.parameter * fraction);
      break;
  }
}

void apply_combined(GaussianState& state, const std::vector<ChannelOp>& ops, int steps) {
  if (steps < 1) throw DomainError("apply_combined: steps must be >= 1");
  const double fraction = 1.0 / steps;
  for (int k = 0; k < steps; ++k) {
    for (const ChannelOp& op : ops) apply_channel(state, op, fraction);
  }
}

}  // namespace becgrav
