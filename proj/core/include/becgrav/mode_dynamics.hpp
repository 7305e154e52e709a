#pragma once

#include <iosfwd>
#include <vector>

#include "becgrav/condensate.hpp"
#include "becgrav/grav_source.hpp"

namespace becgrav {

// Per-mode drive amplitudes of the linearized phonon equation
//   g'' + gamma g' + w^2 (1 + S_n(t)) g = D_n(t) + sum_l T_nl(t) g_l
// with D_n = F_n cos(Omega t + phi), S_n = Sbar_n sin(...), T_nl = Tbar_nl sin(...).
struct DrivingMoments {
  double direct = 0.0;          // F_n, 1/s^2
  double parametric = 0.0;      // Sbar_n
  double coupling = 0.0;        // Tbar_nl, 1/s^2
  double coupling_drive = 0.0;  // G_ln, 1/s^2
};

// (1 - (-1)^k) a/L - (1 + (-1)^k) G/2 : odd k picks the acceleration,
// even k the gradient.
double parity_drive(const FieldAmplitudes& ampl, double length, int k);

double direct_drive_amplitude(const FieldAmplitudes& ampl, const CondensateSpec& spec, int n,
                              double drive_omega);
double parametric_amplitude(const FieldAmplitudes& ampl, const CondensateSpec& spec, int n);
double coupling_amplitude(const FieldAmplitudes& ampl, const CondensateSpec& spec,
                          const CondensateParams& params, int n, int l);
double coupling_drive(const FieldAmplitudes& ampl, const CondensateSpec& spec,
                      const CondensateParams& params, int n, int l, double gbar_l);

DrivingMoments driving_moments(const FieldAmplitudes& ampl, const CondensateSpec& spec,
                               const CondensateParams& params, int n, int l, double gbar_l,
                               double drive_omega);

struct Oscillation {
  double g = 0.0;
  double gdot = 0.0;
};

// phi_tilde = phi + pi/2, so that F cos(Omega t + phi) = F sin(Omega t + phi_tilde).
double shifted_phase(double phi);

struct SteadyState {
  double amplitude = 0.0;  // F / (gamma w)
  double phase_lag = 0.0;  // response behind drive, rad
};

SteadyState steady_state_response(double force, double gamma, double omega);
// Resonant steady state for drive F sin(w t + phi_tilde).
Oscillation steady_state_motion(double force, double gamma, double omega, double phi_tilde,
                                double t);

// Undamped response from rest to F sin(Omega t + phi_tilde); the resonant
// branch is taken when |Omega - w| <= 1e-12 w.
Oscillation transient_response(double force, double omega, double drive_omega, double phi_tilde,
                               double t);
double resonant_envelope(double force, double omega, double t);

inline constexpr double kPerturbativeAmplitude = 0.1;
bool exceeds_perturbative_limit(double gbar);

double phonons_from_amplitude(double gbar, int n, const CondensateSpec& spec,
                              const CondensateParams& params);
double amplitude_from_phonons(double phonons, int n, const CondensateSpec& spec,
                              const CondensateParams& params);
double single_phonon_amplitude(int n, const CondensateSpec& spec, const CondensateParams& params);
// f_n = -m zeta^2 g'_n / hbar
double density_amplitude_from_rate(double gdot, const CondensateSpec& spec,
                                   const CondensateParams& params);

double created_phonons_direct(const FieldAmplitudes& ampl, const CondensateSpec& spec,
                              const CondensateParams& params, int n, double t);

struct CouplingThreshold {
  double amplitude = 0.0;  // gbar_lim
  double phonons = 0.0;    // N_lim
};
CouplingThreshold coupling_threshold(int n, int l, const CondensateSpec& spec,
                                     const CondensateParams& params);

enum class CouplingResonance {
  kSum,               // Omega = w_n + w_l
  kDifferenceBelow,   // Omega = w_n - w_l
  kDifferenceAbove,   // Omega = w_l - w_n
};

CouplingResonance classify_coupling_resonance(double drive_omega, double omega_n, double omega_l,
                                              double rel_tol = 1e-6);
// Effective phase phi_tilde_l entering the resonant coupling response.
double coupling_phase(CouplingResonance kind, double phi, double phi_l);
Oscillation coupling_response(double coupling_drive, double omega_n, double t, double phi_tilde_l,
                              double g_n0 = 0.0, double phi0 = 0.0);
double created_phonons_coupling(const FieldAmplitudes& ampl, const CondensateSpec& spec,
                                const CondensateParams& params, int n, int l,
                                double initial_coherent_l, double t);

double parametric_growth(double gbar0, double sbar, double omega, double t);
double delta_n_parametric(double n0, double sbar, double omega, double t);

struct StationaryProfile {
  std::vector<double> x;
  std::vector<double> alpha;
  double delta_mu = 0.0;       // J
  double mu_ratio = 0.0;       // delta_mu / mu
  double max_abs_alpha = 0.0;

  // Composite Simpson (3/8 tail for odd interval counts): exact for the
  // quadratic profile.
  double integral() const;
};

inline constexpr int kStationaryGridPoints = 1024;

StationaryProfile stationary_perturbation(const FieldCoefficients& coeffs,
                                          const CondensateSpec& spec,
                                          const CondensateParams& params,
                                          int grid_points = kStationaryGridPoints);

struct CoupledModeProblem {
  std::vector<int> modes;
  FieldAmplitudes amplitudes;
  CondensateSpec spec;
  CondensateParams params;
  double drive_omega = 0.0;
  double drive_phase = 0.0;     // phi
  std::vector<double> damping;  // one per mode, or a single shared value
  bool direct = true;
  bool parametric = true;
  bool coupling = true;
};

struct ModeTrajectory {
  std::vector<int> modes;
  std::vector<double> time;
  // state[k] = {g_1, gdot_1, g_2, gdot_2, ...} at time[k]
  std::vector<std::vector<double>> state;

  void write_csv(std::ostream& os) const;
};

double max_integration_step(const CoupledModeProblem& problem);

// Fixed-step RK4; refuses steps above max_integration_step.
ModeTrajectory integrate_coupled_modes(const CoupledModeProblem& problem,
                                       const std::vector<double>& initial, double t0, double t1,
                                       double step, int sample_every = 1);

}  // namespace becgrav
