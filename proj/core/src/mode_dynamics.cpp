#include "becgrav/mode_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "becgrav/constants.hpp"
#include "becgrav/errors.hpp"

namespace becgrav {

using constants::kHbar;
using constants::kPi;
using constants::kSqrt2;

namespace {

double parity_sign(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

void require_mode(int n, const char* what) {
  if (n < 1) {
    std::ostringstream msg;
    msg << what << ": mode index must be >= 1 (got " << n << ")";
    throw DomainError(msg.str());
  }
}

void require_pair(int n, int l, const char* what) {
  require_mode(n, what);
  require_mode(l, what);
  if (n == l) {
    std::ostringstream msg;
    msg << what << ": l == n has no coupling term; use the parametric amplitude";
    throw DomainError(msg.str());
  }
}

}  // namespace

double parity_drive(const FieldAmplitudes& ampl, double length, int k) {
  const double s = parity_sign(k);
  return (1.0 - s) * ampl.accel_osc / length - (1.0 + s) * ampl.gradient_osc / 2.0;
}

double direct_drive_amplitude(const FieldAmplitudes& ampl, const CondensateSpec& spec, int n,
                              double drive_omega) {
  require_mode(n, "direct_drive_amplitude");
  const double L = spec.length;
  const double npi2 = n * n * kPi * kPi;
  return parity_drive(ampl, L, n) * 2.0 * L * L * spec.species.mass * drive_omega /
         (npi2 * kHbar);
}

double parametric_amplitude(const FieldAmplitudes& ampl, const CondensateSpec& spec, int n) {
  require_mode(n, "parametric_amplitude");
  const double m = spec.species.mass;
  const double L2 = spec.length * spec.length;
  const double npi = n * kPi;
  const double npi4 = npi * npi * npi * npi;
  return ampl.gradient_osc * m * m * L2 * L2 / (2.0 * npi4 * kHbar * kHbar);
}

double coupling_amplitude(const FieldAmplitudes& ampl, const CondensateSpec& spec,
                          const CondensateParams& params, int n, int l) {
  require_pair(n, l, "coupling_amplitude");
  const double L = spec.length;
  const double z = params.healing_length;
  const double sum = double(l) * l + double(n) * n;
  const double diff = double(l) * l - double(n) * n;
  return parity_drive(ampl, L, l + n) * 2.0 * L * L * sum / (z * z * diff * diff * kPi * kPi);
}

double coupling_drive(const FieldAmplitudes& ampl, const CondensateSpec& spec,
                      const CondensateParams& params, int n, int l, double gbar_l) {
  return 0.5 * gbar_l * coupling_amplitude(ampl, spec, params, n, l);
}

DrivingMoments driving_moments(const FieldAmplitudes& ampl, const CondensateSpec& spec,
                               const CondensateParams& params, int n, int l, double gbar_l,
                               double drive_omega) {
  DrivingMoments d;
  d.direct = direct_drive_amplitude(ampl, spec, n, drive_omega);
  d.parametric = parametric_amplitude(ampl, spec, n);
  d.coupling = coupling_amplitude(ampl, spec, params, n, l);
  d.coupling_drive = 0.5 * gbar_l * d.coupling;
  return d;
}

double shifted_phase(double phi) { return phi + kPi / 2.0; }

SteadyState steady_state_response(double force, double gamma, double omega) {
  if (!(gamma > 0.0)) {
    throw DomainError("steady_state_response: gamma must be positive (use transient_response)");
  }
  if (!(omega > 0.0)) throw DomainError("steady_state_response: omega must be positive");
  return {force / (gamma * omega), kPi / 2.0};
}

Oscillation steady_state_motion(double force, double gamma, double omega, double phi_tilde,
                                double t) {
  const SteadyState s = steady_state_response(force, gamma, omega);
  const double th = omega * t + phi_tilde;
  return {-s.amplitude * std::cos(th), s.amplitude * omega * std::sin(th)};
}

Oscillation transient_response(double force, double omega, double drive_omega, double phi_tilde,
                               double t) {
  if (!(omega > 0.0)) throw DomainError("transient_response: omega must be positive");
  const double w = omega;
  if (std::abs(drive_omega - w) <= 1e-12 * w) {
    const double k = -force / (2.0 * w * w);
    const double th = w * t + phi_tilde;
    const double c0 = std::cos(phi_tilde);
    const double g = k * (w * t * std::cos(th) - std::sin(w * t) * c0);
    const double gd = k * (w * std::cos(th) - w * w * t * std::sin(th) - w * std::cos(w * t) * c0);
    return {g, gd};
  }
  const double W = drive_omega;
  const double k = force / (w * w - W * W);
  const double s0 = std::sin(phi_tilde);
  const double c0 = std::cos(phi_tilde);
  const double g =
      k * (std::sin(W * t + phi_tilde) - (s0 * std::cos(w * t) + (W / w) * c0 * std::sin(w * t)));
  const double gd =
      k * (W * std::cos(W * t + phi_tilde) - (-s0 * w * std::sin(w * t) + W * c0 * std::cos(w * t)));
  return {g, gd};
}

double resonant_envelope(double force, double omega, double t) {
  return force * t / (2.0 * omega);
}

bool exceeds_perturbative_limit(double gbar) { return std::abs(gbar) > kPerturbativeAmplitude; }

double phonons_from_amplitude(double gbar, int n, const CondensateSpec& spec,
                              const CondensateParams& params) {
  require_mode(n, "phonons_from_amplitude");
  const double na = spec.resolved_atom_number();
  return n * kPi * params.healing_length * na * gbar * gbar / (2.0 * kSqrt2 * spec.length);
}

double amplitude_from_phonons(double phonons, int n, const CondensateSpec& spec,
                              const CondensateParams& params) {
  if (!(phonons >= 0.0)) throw DomainError("amplitude_from_phonons: phonon number must be >= 0");
  return std::sqrt(phonons / phonons_from_amplitude(1.0, n, spec, params));
}

double single_phonon_amplitude(int n, const CondensateSpec& spec, const CondensateParams& params) {
  const double k = mode_wavenumber(spec.length, n);
  return std::sqrt(2.0 * kSqrt2 / (k * params.healing_length * spec.resolved_atom_number()));
}

double density_amplitude_from_rate(double gdot, const CondensateSpec& spec,
                                   const CondensateParams& params) {
  const double z = params.healing_length;
  return -spec.species.mass * z * z * gdot / kHbar;
}

double created_phonons_direct(const FieldAmplitudes& ampl, const CondensateSpec& spec,
                              const CondensateParams& params, int n, double t) {
  require_mode(n, "created_phonons_direct");
  const double m = spec.species.mass;
  const double L = spec.length;
  const double npi = n * kPi;
  const double na = spec.resolved_atom_number();
  const double drive = (n % 2 == 1) ? ampl.accel_osc / L : ampl.gradient_osc / 2.0;
  return m * m * kSqrt2 * params.healing_length * na * L * L * L * t * t /
         (kHbar * kHbar * npi * npi * npi) * drive * drive;
}

CouplingThreshold coupling_threshold(int n, int l, const CondensateSpec& spec,
                                     const CondensateParams& params) {
  require_pair(n, l, "coupling_threshold");
  const double q = kPi * params.healing_length / (kSqrt2 * spec.length);
  const double sum = double(l) * l + double(n) * n;
  const double diff = double(l) * l - double(n) * n;
  CouplingThreshold c;
  c.amplitude = q * diff * diff / (n * sum);
  c.phonons = spec.resolved_atom_number() * q * q * q * diff * diff * diff * diff /
              (2.0 * n * sum * sum);
  return c;
}

CouplingResonance classify_coupling_resonance(double drive_omega, double omega_n, double omega_l,
                                              double rel_tol) {
  const double tol = rel_tol * std::abs(drive_omega);
  if (std::abs(drive_omega - (omega_n + omega_l)) <= tol) return CouplingResonance::kSum;
  if (std::abs(drive_omega - (omega_n - omega_l)) <= tol) return CouplingResonance::kDifferenceBelow;
  if (std::abs(drive_omega - (omega_l - omega_n)) <= tol) return CouplingResonance::kDifferenceAbove;
  std::ostringstream msg;
  msg << "coupling: drive " << drive_omega << " rad/s is neither w_n + w_l = "
      << omega_n + omega_l << " nor |w_n - w_l| = " << std::abs(omega_n - omega_l) << " rad/s";
  throw ResonanceError(msg.str());
}

double coupling_phase(CouplingResonance kind, double phi, double phi_l) {
  switch (kind) {
    case CouplingResonance::kSum: return phi - phi_l + kPi / 2.0;
    case CouplingResonance::kDifferenceBelow: return phi + phi_l - kPi / 2.0;
    case CouplingResonance::kDifferenceAbove: return -phi + phi_l + kPi / 2.0;
  }
  return 0.0;
}

Oscillation coupling_response(double coupling_drive, double omega_n, double t, double phi_tilde_l,
                              double g_n0, double phi0) {
  Oscillation o = transient_response(coupling_drive, omega_n, omega_n, phi_tilde_l, t);
  o.g += g_n0 * std::sin(omega_n * t + phi0);
  o.gdot += g_n0 * omega_n * std::cos(omega_n * t + phi0);
  return o;
}

double created_phonons_coupling(const FieldAmplitudes& ampl, const CondensateSpec& spec,
                                const CondensateParams& params, int n, int l,
                                double initial_coherent_l, double t) {
  require_pair(n, l, "created_phonons_coupling");
  const double m = spec.species.mass;
  const double L = spec.length;
  const double sum = double(l) * l + double(n) * n;
  const double diff = double(l) * l - double(n) * n;
  const double pre = kSqrt2 * m * t * L * L * L * sum /
                     (kHbar * params.healing_length * std::sqrt(double(n) * l) * diff * diff *
                      kPi * kPi * kPi);
  const double s = parity_sign(l + n);
  const double a = ampl.accel_osc / L;
  const double g = ampl.gradient_osc / 2.0;
  return initial_coherent_l * pre * pre * ((1.0 - s) / 2.0 * a * a + (1.0 + s) / 2.0 * g * g);
}

double parametric_growth(double gbar0, double sbar, double omega, double t) {
  return gbar0 * std::exp(sbar * omega * t / 4.0);
}

double delta_n_parametric(double n0, double sbar, double omega, double t) {
  return n0 * std::expm1(sbar * omega * t / 2.0);
}

double StationaryProfile::integral() const {
  const std::size_t n = x.size();
  if (n < 2) return 0.0;
  const double h = x[1] - x[0];
  const std::size_t intervals = n - 1;
  std::size_t simpson_end = (intervals % 2 == 0) ? intervals : intervals - 3;
  double sum = 0.0;
  if (simpson_end >= 2) {
    double s = alpha[0] + alpha[simpson_end];
    for (std::size_t i = 1; i < simpson_end; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * alpha[i];
    sum += s * h / 3.0;
  }
  if (simpson_end != intervals) {
    const std::size_t i = simpson_end;
    sum += 3.0 * h / 8.0 * (alpha[i] + 3.0 * alpha[i + 1] + 3.0 * alpha[i + 2] + alpha[i + 3]);
  }
  return sum;
}

StationaryProfile stationary_perturbation(const FieldCoefficients& coeffs,
                                          const CondensateSpec& spec,
                                          const CondensateParams& params, int grid_points) {
  if (grid_points < 4) throw DomainError("stationary_perturbation: need at least 4 grid points");
  const double L = spec.length;
  const double c2 = params.sound_speed * params.sound_speed;
  StationaryProfile p;
  p.x.resize(grid_points);
  p.alpha.resize(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    const double x = -L / 2.0 + L * i / (grid_points - 1);
    const double a = (-coeffs.accel * x + coeffs.gradient / 2.0 * (L * L / 12.0 - x * x)) /
                     (2.0 * c2);
    p.x[i] = x;
    p.alpha[i] = a;
    p.max_abs_alpha = std::max(p.max_abs_alpha, std::abs(a));
  }
  const double m = spec.species.mass;
  p.delta_mu = m * coeffs.phi0 + m * coeffs.gradient * L * L / 24.0;
  p.mu_ratio = p.delta_mu / params.chemical_potential;
  return p;
}

void ModeTrajectory::write_csv(std::ostream& os) const {
  os << "t";
  for (int n : modes) os << ",g_" << n << ",gdot_" << n;
  os << '\n';
  char buf[32];
  for (std::size_t k = 0; k < time.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.9g", time[k]);
    os << buf;
    for (double v : state[k]) {
      std::snprintf(buf, sizeof buf, "%.9e", v);
      os << ',' << buf;
    }
    os << '\n';
  }
}

double max_integration_step(const CoupledModeProblem& problem) {
  double w_max = 0.0;
  for (int n : problem.modes) {
    w_max = std::max(w_max, mode_frequency(problem.params, problem.spec.length, n));
  }
  double period = 2.0 * kPi / w_max;
  if (problem.drive_omega > 0.0) period = std::min(period, 2.0 * kPi / problem.drive_omega);
  return period / 200.0;
}

namespace {

struct ModeSystem {
  std::size_t size = 0;
  std::vector<double> omega2;
  std::vector<double> gamma;
  std::vector<double> force;
  std::vector<double> sbar;
  std::vector<double> tbar;  // size x size, row n, column l
  double drive_omega = 0.0;
  double phi = 0.0;

  void derivative(double t, const std::vector<double>& y, std::vector<double>& dy) const {
    const double arg = drive_omega * t + phi;
    const double s = std::sin(arg);
    const double c = std::cos(arg);
    for (std::size_t i = 0; i < size; ++i) {
      const double g = y[2 * i];
      const double gd = y[2 * i + 1];
      double acc = -gamma[i] * gd - omega2[i] * (1.0 + sbar[i] * s) * g + force[i] * c;
      for (std::size_t j = 0; j < size; ++j) {
        if (j != i) acc += tbar[i * size + j] * s * y[2 * j];
      }
      dy[2 * i] = gd;
      dy[2 * i + 1] = acc;
    }
  }
};

ModeSystem build_system(const CoupledModeProblem& p) {
  ModeSystem sys;
  sys.size = p.modes.size();
  sys.drive_omega = p.drive_omega;
  sys.phi = p.drive_phase;
  if (!(p.damping.empty() || p.damping.size() == 1 || p.damping.size() == sys.size)) {
    throw DomainError("integrate_coupled_modes: damping needs one value or one per mode");
  }
  for (std::size_t i = 0; i < sys.size; ++i) {
    const int n = p.modes[i];
    const double w = mode_frequency(p.params, p.spec.length, n);
    sys.omega2.push_back(w * w);
    double gamma = 0.0;
    if (p.damping.size() == 1) gamma = p.damping[0];
    if (p.damping.size() == sys.size) gamma = p.damping[i];
    if (gamma < 0.0) throw DomainError("integrate_coupled_modes: damping must be >= 0");
    sys.gamma.push_back(gamma);
    sys.force.push_back(p.direct ? direct_drive_amplitude(p.amplitudes, p.spec, n, p.drive_omega)
                                 : 0.0);
    sys.sbar.push_back(p.parametric ? parametric_amplitude(p.amplitudes, p.spec, n) : 0.0);
  }
  sys.tbar.assign(sys.size * sys.size, 0.0);
  if (p.coupling) {
    for (std::size_t i = 0; i < sys.size; ++i) {
      for (std::size_t j = 0; j < sys.size; ++j) {
        if (i == j) continue;
        if (p.modes[i] == p.modes[j]) throw DomainError("integrate_coupled_modes: duplicate mode");
        sys.tbar[i * sys.size + j] =
            coupling_amplitude(p.amplitudes, p.spec, p.params, p.modes[i], p.modes[j]);
      }
    }
  }
  return sys;
}

}  // namespace

ModeTrajectory integrate_coupled_modes(const CoupledModeProblem& problem,
                                       const std::vector<double>& initial, double t0, double t1,
                                       double step, int sample_every) {
  if (problem.modes.empty()) throw DomainError("integrate_coupled_modes: empty mode set");
  if (initial.size() != 2 * problem.modes.size()) {
    throw DomainError("integrate_coupled_modes: initial state needs (g, gdot) per mode");
  }
  if (!(t1 > t0)) throw DomainError("integrate_coupled_modes: t1 must exceed t0");
  if (sample_every < 1) throw DomainError("integrate_coupled_modes: sample_every must be >= 1");
  const double h_max = max_integration_step(problem);
  if (!(step > 0.0) || step > h_max * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "integrate_coupled_modes: step " << step << " s exceeds the limit " << h_max
        << " s (min(2 pi/Omega, 2 pi/w_max)/200)";
    throw NumericError(msg.str());
  }
  const ModeSystem sys = build_system(problem);
  const auto steps = static_cast<long long>(std::ceil((t1 - t0) / step - 1e-9));
  const double h = (t1 - t0) / static_cast<double>(steps);

  ModeTrajectory traj;
  traj.modes = problem.modes;
  std::vector<double> y = initial;
  const std::size_t dim = y.size();
  std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
  traj.time.push_back(t0);
  traj.state.push_back(y);
  for (long long s = 0; s < steps; ++s) {
    const double t = t0 + h * static_cast<double>(s);
    sys.derivative(t, y, k1);
    for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    sys.derivative(t + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    sys.derivative(t + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < dim; ++i) tmp[i] = y[i] + h * k3[i];
    sys.derivative(t + h, tmp, k4);
    for (std::size_t i = 0; i < dim; ++i) {
      y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(y[i])) throw NumericError("integrate_coupled_modes: non-finite state");
    }
    if ((s + 1) % sample_every == 0 || s + 1 == steps) {
      traj.time.push_back(s + 1 == steps ? t1 : t + h);
      traj.state.push_back(y);
    }
  }
  return traj;
}

}  // namespace becgrav
