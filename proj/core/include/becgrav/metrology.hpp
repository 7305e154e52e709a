#pragma once

#include "becgrav/condensate.hpp"

namespace becgrav {

struct NoiseModel {
  double detection = 1.0;              // Delta N_det, phonons
  // Shot-to-shot Delta T / T. Recorded only: the thermal term uses
  // Delta N_th = N_th, which already dominates a 20% temperature jitter.
  double temperature_rel = 0.2;
  double atom_rel = 0.1;               // Delta N_a / N_a
  double initial_coherent_rel = 0.01;  // Delta N_lc0 / N_lc0

  void validate() const;
};

// Variance terms per repetition; snr = sqrt(reps / sum).
struct SensitivityReport {
  double snr = 0.0;
  double repetitions = 0.0;
  double thermal = 0.0;
  double detection = 0.0;
  double atoms = 0.0;
  double initial = 0.0;

  double variance_sum() const { return thermal + detection + atoms + initial; }
};

inline constexpr double kDefaultRepetitions = 1e4;
inline constexpr double kDefaultInteractionTime = 10.0;  // s

// Coherent (direct-drive) readout.
SensitivityReport snr_direct(double n_cr, double n_th, const NoiseModel& noise, double atom_number,
                             double reps);
// Readout seeded by an initial state (squeezing / mixing channels).
SensitivityReport snr_parametric(double n_cr, double n_th, const NoiseModel& noise,
                                 double atom_number, double initial_coherent, double reps);

// Smallest N_cr reaching snr_target; throws InfeasibleError when the
// signal-independent terms alone exceed the budget.
double required_signal(double snr_target, double n_th, const NoiseModel& noise, double reps,
                       bool parametric);

double required_atoms_direct(double n_cr, int n, double omega_n, double accel_osc, double t,
                             const AtomSpecies& species);

enum class SqueezeChannel { kTwoMode, kSingleMode, kModeMix };

// Two-mode / mixing: N_cr / r^2; single-mode: N_cr / (2 r).
double required_initial_phonons(double n_cr, double r, SqueezeChannel channel);
// Keeps the seeded mode amplitude at or below 0.1: 1e2 2 sqrt2 L N0 / (n pi zeta).
double min_atoms_for_state(double initial_phonons, int n, const CondensateSpec& spec,
                           const CondensateParams& params);

double qfi_two_mode(double squeezed_initial, double amplitude, double t, double epsilon);
double qfi_mode_mix(double squeezed_initial, double amplitude, double t, double epsilon);
double qcrb(double fisher_information, double reps);

// omega^2 S_x / sqrt(t reps)
double seismic_floor(double displacement_asd, double omega, double t_int, double reps);

}  // namespace becgrav
