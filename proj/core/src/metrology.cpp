#include "becgrav/metrology.hpp"

#include <cmath>
#include <sstream>

#include "becgrav/constants.hpp"
#include "becgrav/errors.hpp"

namespace becgrav {

using constants::kHbar;
using constants::kPi;
using constants::kSqrt2;

void NoiseModel::validate() const {
  if (!(detection >= 0.0) || !(temperature_rel >= 0.0) || !(atom_rel >= 0.0) ||
      !(initial_coherent_rel >= 0.0)) {
    throw DomainError("noise model: fluctuations must be >= 0");
  }
}

namespace {

void require_inputs(double n_cr, double reps) {
  if (!(n_cr > 0.0)) throw DomainError("snr: N_cr must be positive (SNR undefined)");
  if (!(reps > 0.0)) throw DomainError("snr: repetitions must be positive");
}

SensitivityReport finish(SensitivityReport r) {
  r.snr = std::sqrt(r.repetitions / r.variance_sum());
  return r;
}

}  // namespace

SensitivityReport snr_direct(double n_cr, double n_th, const NoiseModel& noise, double atom_number,
                             double reps) {
  require_inputs(n_cr, reps);
  noise.validate();
  if (!(atom_number > 0.0)) throw DomainError("snr: N_a must be positive");
  const double dna = noise.atom_rel * atom_number;
  SensitivityReport r;
  r.repetitions = reps;
  r.thermal = n_th * n_th / (4.0 * n_cr * n_cr);
  r.detection = noise.detection * noise.detection / (4.0 * n_cr * n_cr);
  r.atoms = dna * dna / (16.0 * atom_number * atom_number);
  return finish(r);
}

SensitivityReport snr_parametric(double n_cr, double n_th, const NoiseModel& noise,
                                 double atom_number, double initial_coherent, double reps) {
  require_inputs(n_cr, reps);
  noise.validate();
  if (!(atom_number > 0.0)) throw DomainError("snr: N_a must be positive");
  if (!(initial_coherent > 0.0)) throw DomainError("snr: initial phonon number must be positive");
  const double dna = noise.atom_rel * atom_number;
  const double dnl = noise.initial_coherent_rel * initial_coherent;
  SensitivityReport r;
  r.repetitions = reps;
  r.thermal = n_th * n_th / (4.0 * n_cr * n_cr);
  r.detection = noise.detection * noise.detection / (4.0 * n_cr * n_cr);
  r.atoms = dna * dna / (4.0 * atom_number * atom_number);
  r.initial = dnl * dnl / (4.0 * initial_coherent * initial_coherent);
  return finish(r);
}

double required_signal(double snr_target, double n_th, const NoiseModel& noise, double reps,
                       bool parametric) {
  if (!(snr_target > 0.0)) throw DomainError("required_signal: SNR target must be positive");
  if (!(reps > 0.0)) throw DomainError("required_signal: repetitions must be positive");
  noise.validate();
  const double rest = parametric ? noise.atom_rel * noise.atom_rel / 4.0 +
                                       noise.initial_coherent_rel * noise.initial_coherent_rel / 4.0
                                 : noise.atom_rel * noise.atom_rel / 16.0;
  const double budget = reps / (snr_target * snr_target) - rest;
  if (!(budget > 0.0)) {
    std::ostringstream msg;
    msg << "required_signal: SNR " << snr_target << " unreachable with " << reps
        << " repetitions (signal-independent noise alone limits SNR to "
        << std::sqrt(reps / rest) << ")";
    throw InfeasibleError(msg.str());
  }
  return std::sqrt((n_th * n_th + noise.detection * noise.detection) / (4.0 * budget));
}

double required_atoms_direct(double n_cr, int n, double omega_n, double accel_osc, double t,
                             const AtomSpecies& species) {
  if (!(accel_osc > 0.0)) {
    throw InfeasibleError("required_atoms_direct: zero acceleration drive needs infinitely many atoms");
  }
  if (!(t > 0.0)) throw DomainError("required_atoms_direct: t must be positive");
  const double npi = n * kPi;
  return npi * npi * kHbar * omega_n * n_cr / (species.mass * t * t * accel_osc * accel_osc);
}

double required_initial_phonons(double n_cr, double r, SqueezeChannel channel) {
  if (!(r > 0.0)) {
    throw InfeasibleError("required_initial_phonons: zero squeezing needs infinitely many phonons");
  }
  if (channel == SqueezeChannel::kSingleMode) return n_cr / (2.0 * r);
  return n_cr / (r * r);
}

double min_atoms_for_state(double initial_phonons, int n, const CondensateSpec& spec,
                           const CondensateParams& params) {
  if (n < 1) throw DomainError("min_atoms_for_state: mode index must be >= 1");
  return 1e2 * 2.0 * kSqrt2 * spec.length * initial_phonons / (n * kPi * params.healing_length);
}

double qfi_two_mode(double squeezed_initial, double amplitude, double t, double epsilon) {
  if (!(squeezed_initial >= 0.0) || !(epsilon > 0.0)) {
    throw DomainError("qfi: need N_s0 >= 0 and epsilon > 0");
  }
  const double dr = 2.0 * std::abs(amplitude) * t / kHbar;
  const double s = 2.0 * (2.0 * squeezed_initial + 1.0) * dr / epsilon;
  return s * s;
}

double qfi_mode_mix(double squeezed_initial, double amplitude, double t, double epsilon) {
  if (!(squeezed_initial >= 0.0) || !(epsilon > 0.0)) {
    throw DomainError("qfi: need N_s0 >= 0 and epsilon > 0");
  }
  const double th = 2.0 * std::abs(amplitude) * t / (kHbar * epsilon);
  return 4.0 * squeezed_initial * (squeezed_initial + 2.0) * th * th;
}

double qcrb(double fisher_information, double reps) {
  if (!(fisher_information > 0.0)) throw DomainError("qcrb: zero Fisher information, bound unbounded");
  if (!(reps > 0.0)) throw DomainError("qcrb: repetitions must be positive");
  return 1.0 / std::sqrt(reps * fisher_information);
}

double seismic_floor(double displacement_asd, double omega, double t_int, double reps) {
  if (!(displacement_asd > 0.0) || !(omega > 0.0) || !(t_int > 0.0) || !(reps > 0.0)) {
    throw DomainError("seismic_floor: inputs must be positive");
  }
  return omega * omega * displacement_asd / std::sqrt(t_int * reps);
}

}  // namespace becgrav
