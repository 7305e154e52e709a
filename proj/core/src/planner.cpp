#include "becgrav/planner.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "becgrav/constants.hpp"
#include "becgrav/errors.hpp"
#include "becgrav/mode_dynamics.hpp"
#include "becgrav/quantum_channels.hpp"

namespace becgrav {

using constants::kHbar;
using constants::kPi;
using constants::kSqrt2;

namespace {

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '-' || c == ' ') c = '_';
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

constexpr double kShortBox = 200e-6;
constexpr double kLongBox = 500e-6;

struct Layout {
  int n = 1;
  int l = 0;
  int n_omega = 1;
  double length = kShortBox;
};

Layout layout_for(Scheme s, Target t) {
  const bool acc = t == Target::kAcceleration;
  switch (s) {
    case Scheme::kDirect:
      return acc ? Layout{1, 0, 1, kShortBox} : Layout{2, 0, 2, kShortBox};
    case Scheme::kTwoModeSqueeze:
      // n = (n_Omega + 1)/2 for odd n_Omega, n_Omega/2 + 1 for even.
      return acc ? Layout{2, 1, 3, kShortBox} : Layout{3, 1, 4, kLongBox};
    case Scheme::kSingleModeSqueeze:
      return Layout{1, 0, 2, kLongBox};
    case Scheme::kModeMix:
      return acc ? Layout{3, 2, 1, kShortBox} : Layout{3, 1, 2, kLongBox};
  }
  throw DomainError("planner: unknown scheme");
}

FieldAmplitudes drive_amplitudes(const FieldAmplitudes& geo, const PlanConstraints& c) {
  FieldAmplitudes d = geo;
  switch (c.amplitudes) {
    case AmplitudeSource::kGeometry:
      break;
    case AmplitudeSource::kTableConvention:
      d.accel_osc = 2.0 * geo.accel_osc;
      break;
    case AmplitudeSource::kNominal:
      d.accel_osc = c.nominal_acceleration;
      d.gradient_osc = c.nominal_gradient;
      break;
  }
  return d;
}

double relative_difference(double a, double b) {
  if (a == b) return 0.0;
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) / scale;
}

// Shared set-up: geometry, condensate, resonance, source amplitudes.
ExperimentPlan prepare(const PlanRequest& req, Scheme scheme) {
  const PlanConstraints& c = req.constraints;
  c.validate();
  const Layout lay = layout_for(scheme, req.target);

  ExperimentPlan p;
  p.scheme = scheme;
  p.target = req.target;
  p.amplitude_source = c.amplitudes;
  p.n = lay.n;
  p.l = lay.l;
  p.n_omega = lay.n_omega;
  p.interaction_time = c.interaction_time;
  p.loss_rate = c.loss_rate;
  p.noise = c.noise;

  p.condensate.species = req.species;
  p.condensate.length = c.length.value_or(lay.length);
  p.condensate.density = c.density;
  p.condensate.temperature = c.temperature;
  p.condensate.validate();
  p.params = derive_params(p.condensate);

  p.mode_omega = mode_frequency(p.params, p.condensate.length, p.n);
  p.drive_omega = p.n_omega * mode_frequency(p.params, p.condensate.length, 1);

  p.source = req.source;
  p.source.omega = p.drive_omega;
  p.source.validate();
  p.r0 = equilibrium_distance(p.source, p.condensate.length);
  p.geometry_amplitudes = oscillation_amplitudes(p.source, p.r0);
  p.drive = drive_amplitudes(p.geometry_amplitudes, c);
  p.stroke_ratio = stroke_ratio(p.source, p.r0);
  p.n_th = thermal_occupation(p.mode_omega, c.temperature);
  return p;
}

void set_atoms(ExperimentPlan& p, double atoms) {
  p.atom_number = atoms;
  if (std::isfinite(atoms) && atoms > 0.0) {
    p.condensate.atom_number = atoms;
    p.aspect_ratio = aspect_ratio(atoms, p.condensate.density, p.condensate.length);
  } else {
    p.condensate.atom_number.reset();
    p.aspect_ratio = std::numeric_limits<double>::infinity();
  }
}

void finish(ExperimentPlan& p, const PlanConstraints& c) {
  std::vector<int> modes{p.n};
  if (p.l > 0) modes.push_back(p.l);
  p.validity = validity_report(p.condensate, p.params, modes);
  p.damping = total_rate(p.params, p.condensate, p.n, c.temperature, c.loss_rate);

  if (p.drive_omega < c.min_drive_omega) {
    p.warnings.push_back("drive frequency " + num(p.drive_omega / (2.0 * kPi)) +
                         " Hz below the minimum " + num(c.min_drive_omega / (2.0 * kPi)) + " Hz");
  }
  if (p.stroke_ratio > kStrokeRatioWarning) {
    p.warnings.push_back("stroke ratio delta_R/R0 = " + num(p.stroke_ratio) +
                         " above " + num(kStrokeRatioWarning) + ": first-order source expansion strained");
  } else if (p.stroke_ratio > kStrokeRatioAdvisory) {
    p.warnings.push_back("stroke ratio delta_R/R0 = " + num(p.stroke_ratio) +
                         " above " + num(kStrokeRatioAdvisory) + ": linearization advisory");
  }
  if (p.scheme == Scheme::kDirect && p.coupling_limit > 0.0 && p.n_cr > p.coupling_limit) {
    p.warnings.push_back("created phonons " + num(p.n_cr) + " exceed the inter-mode coupling limit " +
                         num(p.coupling_limit));
  }
  if (p.damping.total * c.interaction_time >= kDampingBudgetWarning) {
    p.warnings.push_back("damping budget gamma t = " + num(p.damping.total * c.interaction_time) +
                         " not small");
  }
  for (const auto& d : p.validity) {
    if (d.verdict == Verdict::kFail) {
      p.warnings.push_back("validity: " + d.criterion + " = " + num(d.ratio));
    }
  }
  if (c.max_aspect_ratio && !(p.aspect_ratio <= *c.max_aspect_ratio)) {
    p.infeasible.push_back("d/L = " + num(p.aspect_ratio) + " exceeds the maximum " +
                           num(*c.max_aspect_ratio));
  }
}

bool zero_drive(ExperimentPlan& p) {
  const double drive = parity_drive(p.drive, p.condensate.length, p.n_omega);
  if (drive == 0.0) {
    p.infeasible.push_back(p.source.stroke == 0.0 ? "zero stroke: no signal"
                                                  : "zero drive amplitude: no signal");
    return true;
  }
  return false;
}

SqueezeChannel channel_of(Scheme s) {
  switch (s) {
    case Scheme::kSingleModeSqueeze: return SqueezeChannel::kSingleMode;
    case Scheme::kModeMix: return SqueezeChannel::kModeMix;
    default: return SqueezeChannel::kTwoMode;
  }
}

double squeeze_parameter(const ExperimentPlan& p) {
  const double m = p.scheme == Scheme::kSingleModeSqueeze
                       ? squeeze_amplitude_closed(p.condensate, p.params, p.drive, p.n)
                       : pair_amplitude_closed(p.condensate, p.params, p.drive, p.n,
                                               p.l > 0 ? p.l : p.n);
  return 2.0 * std::abs(m) * p.interaction_time / kHbar;
}

double created_from_seed(Scheme s, double n0, double r) {
  return s == Scheme::kSingleModeSqueeze ? 2.0 * r * n0 : n0 * r * r;
}

// Largest seed compatible with the perturbative amplitude limit at N_a.
double max_seed(double atoms, int n, const ExperimentPlan& p) {
  return atoms * n * kPi * p.params.healing_length / (1e2 * 2.0 * kSqrt2 * p.condensate.length);
}

ExperimentPlan plan_seeded(const PlanRequest& req, Scheme scheme) {
  const PlanConstraints& c = req.constraints;
  ExperimentPlan p = prepare(req, scheme);
  const bool no_drive = zero_drive(p);
  p.squeeze = squeeze_parameter(p);

  if (c.atom_number) {
    set_atoms(p, *c.atom_number);
    p.initial_phonons = c.initial_phonons.value_or(max_seed(*c.atom_number, p.n, p));
    p.n_cr = created_from_seed(scheme, p.initial_phonons, p.squeeze);
    p.min_atoms = min_atoms_for_state(p.initial_phonons, p.n, p.condensate, p.params);
    if (p.atom_number < p.min_atoms * (1.0 - 1e-12)) {
      p.warnings.push_back("N_a below N_a^min = " + num(p.min_atoms) +
                           " for the seeded state: mode amplitude above 0.1");
    }
    if (p.n_cr > 0.0) {
      p.sensitivity = snr_parametric(p.n_cr, p.n_th, c.noise, p.atom_number, p.initial_phonons,
                                     c.repetitions);
    } else {
      p.sensitivity.repetitions = c.repetitions;
    }
  } else {
    try {
      p.n_cr = required_signal(c.snr_target, p.n_th, c.noise, c.repetitions, true);
    } catch (const InfeasibleError& e) {
      p.infeasible.push_back(e.what());
    }
    if (p.feasible() && !no_drive) {
      p.initial_phonons = required_initial_phonons(p.n_cr, p.squeeze, channel_of(scheme));
      p.min_atoms = min_atoms_for_state(p.initial_phonons, p.n, p.condensate, p.params);
      set_atoms(p, p.min_atoms);
      p.sensitivity = snr_parametric(p.n_cr, p.n_th, c.noise, p.atom_number, p.initial_phonons,
                                     c.repetitions);
    } else {
      p.initial_phonons = std::numeric_limits<double>::infinity();
      p.min_atoms = p.initial_phonons;
      set_atoms(p, p.min_atoms);
    }
  }
  finish(p, c);
  return p;
}

}  // namespace

double scheme_length(Scheme s, Target t) { return layout_for(s, t).length; }

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::kDirect: return "direct";
    case Scheme::kTwoModeSqueeze: return "two_mode_squeeze";
    case Scheme::kSingleModeSqueeze: return "single_mode_squeeze";
    case Scheme::kModeMix: return "mode_mix";
  }
  return "?";
}

std::string_view to_string(Target t) {
  return t == Target::kAcceleration ? "acceleration" : "gradient";
}

std::string_view to_string(AmplitudeSource s) {
  switch (s) {
    case AmplitudeSource::kGeometry: return "geometry";
    case AmplitudeSource::kTableConvention: return "table";
    case AmplitudeSource::kNominal: return "nominal";
  }
  return "?";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  const std::string k = lower(name);
  if (k == "direct") return Scheme::kDirect;
  if (k == "two_mode_squeeze" || k == "two_mode") return Scheme::kTwoModeSqueeze;
  if (k == "single_mode_squeeze" || k == "single_mode") return Scheme::kSingleModeSqueeze;
  if (k == "mode_mix" || k == "mixing") return Scheme::kModeMix;
  return std::nullopt;
}

std::optional<Target> parse_target(std::string_view name) {
  const std::string k = lower(name);
  if (k == "acceleration" || k == "accel") return Target::kAcceleration;
  if (k == "gradient" || k == "gravity_gradient") return Target::kGradient;
  return std::nullopt;
}

std::optional<AmplitudeSource> parse_amplitude_source(std::string_view name) {
  const std::string k = lower(name);
  if (k == "geometry") return AmplitudeSource::kGeometry;
  if (k == "table") return AmplitudeSource::kTableConvention;
  if (k == "nominal") return AmplitudeSource::kNominal;
  return std::nullopt;
}

void PlanConstraints::validate() const {
  if (!(temperature >= 0.0)) throw DomainError("plan: temperature must be non-negative");
  if (!(density > 0.0)) throw DomainError("plan: density must be positive");
  if (!(interaction_time > 0.0)) throw DomainError("plan: interaction time must be positive");
  if (!(repetitions > 0.0)) throw DomainError("plan: repetitions must be positive");
  if (!(snr_target > 0.0)) throw DomainError("plan: SNR target must be positive");
  if (!(min_drive_omega >= 0.0)) throw DomainError("plan: minimum drive frequency must be >= 0");
  if (!(loss_rate >= 0.0)) throw DomainError("plan: loss rate must be non-negative");
  if (length && !(*length > 0.0)) throw DomainError("plan: L must be positive");
  if (atom_number && !(*atom_number > 0.0)) throw DomainError("plan: N_a must be positive");
  if (initial_phonons && !(*initial_phonons > 0.0)) {
    throw DomainError("plan: initial phonon number must be positive");
  }
  if (initial_phonons && !atom_number) {
    throw DomainError("plan: initial phonon number needs a fixed N_a");
  }
  if (max_aspect_ratio && !(*max_aspect_ratio > 0.0)) {
    throw DomainError("plan: maximum d/L must be positive");
  }
  if (amplitudes == AmplitudeSource::kNominal &&
      (!(nominal_acceleration >= 0.0) || !(nominal_gradient >= 0.0))) {
    throw DomainError("plan: nominal amplitudes must be non-negative");
  }
  noise.validate();
}

ExperimentPlan plan_direct(const PlanRequest& req) {
  const PlanConstraints& c = req.constraints;
  ExperimentPlan p = prepare(req, Scheme::kDirect);
  const bool no_drive = zero_drive(p);

  if (c.atom_number) {
    set_atoms(p, *c.atom_number);
    p.n_cr = created_phonons_direct(p.drive, p.condensate, p.params, p.n, c.interaction_time);
    if (p.n_cr > 0.0) {
      p.sensitivity = snr_direct(p.n_cr, p.n_th, c.noise, p.atom_number, c.repetitions);
    } else {
      p.sensitivity.repetitions = c.repetitions;
    }
  } else {
    try {
      p.n_cr = required_signal(c.snr_target, p.n_th, c.noise, c.repetitions, false);
    } catch (const InfeasibleError& e) {
      p.infeasible.push_back(e.what());
    }
    if (p.feasible() && !no_drive) {
      double atoms = 0.0;
      if (p.n % 2 == 1) {
        atoms = required_atoms_direct(p.n_cr, p.n, p.mode_omega, p.drive.accel_osc,
                                      c.interaction_time, req.species);
      } else {
        // N_cr is linear in N_a.
        CondensateSpec unit = p.condensate;
        unit.atom_number = 1.0;
        atoms = p.n_cr / created_phonons_direct(p.drive, unit, p.params, p.n, c.interaction_time);
      }
      set_atoms(p, atoms);
      p.sensitivity = snr_direct(p.n_cr, p.n_th, c.noise, p.atom_number, c.repetitions);
    } else {
      set_atoms(p, std::numeric_limits<double>::infinity());
    }
  }
  if (p.condensate.atom_number) {
    p.coupling_limit = coupling_threshold(p.n, p.n + 1, p.condensate, p.params).phonons;
  }
  finish(p, c);
  return p;
}

ExperimentPlan plan_two_mode(const PlanRequest& req) {
  return plan_seeded(req, Scheme::kTwoModeSqueeze);
}

ExperimentPlan plan_single_mode(const PlanRequest& req) {
  if (req.target == Target::kAcceleration) {
    throw DomainError(
        "single-mode squeezing is driven only by the gravity gradient; acceleration target "
        "unsupported");
  }
  return plan_seeded(req, Scheme::kSingleModeSqueeze);
}

ExperimentPlan plan_mode_mix(const PlanRequest& req) {
  return plan_seeded(req, Scheme::kModeMix);
}

ExperimentPlan make_plan(const PlanRequest& req) {
  switch (req.scheme) {
    case Scheme::kDirect: return plan_direct(req);
    case Scheme::kTwoModeSqueeze: return plan_two_mode(req);
    case Scheme::kSingleModeSqueeze: return plan_single_mode(req);
    case Scheme::kModeMix: return plan_mode_mix(req);
  }
  throw DomainError("planner: unknown scheme");
}

std::vector<AuditEntry> audit_plan(const ExperimentPlan& p, double tol) {
  std::vector<AuditEntry> all;
  auto check = [&](const char* field, double stored, double recomputed) {
    if (!std::isfinite(stored) && stored == recomputed) return;
    all.push_back({field, stored, recomputed, relative_difference(stored, recomputed)});
  };

  const CondensateParams params = derive_params(p.condensate);
  const double L = p.condensate.length;
  check("zeta", p.params.healing_length, params.healing_length);
  check("c0", p.params.sound_speed, params.sound_speed);
  check("omega_n", p.mode_omega, mode_frequency(params, L, p.n));
  check("Omega", p.drive_omega, p.n_omega * mode_frequency(params, L, 1));
  check("R0", p.r0, equilibrium_distance(p.source, L));
  const FieldAmplitudes geo = oscillation_amplitudes(p.source, p.r0);
  check("a_Omega", p.geometry_amplitudes.accel_osc, geo.accel_osc);
  check("G_Omega", p.geometry_amplitudes.gradient_osc, geo.gradient_osc);
  check("N_th", p.n_th, thermal_occupation(p.mode_omega, p.condensate.temperature));
  if (std::isfinite(p.atom_number)) {
    check("d/L", p.aspect_ratio, aspect_ratio(p.atom_number, p.condensate.density, L));
  }
  const DampingBreakdown d =
      total_rate(params, p.condensate, p.n, p.condensate.temperature, p.loss_rate);
  check("gamma", p.damping.total, d.total);

  if (p.scheme == Scheme::kDirect) {
    if (p.condensate.atom_number) {
      check("N_cr", p.n_cr,
            created_phonons_direct(p.drive, p.condensate, params, p.n, p.interaction_time));
      check("N_lim", p.coupling_limit, coupling_threshold(p.n, p.n + 1, p.condensate, params).phonons);
    }
    if (p.n_cr > 0.0 && std::isfinite(p.atom_number)) {
      check("SNR", p.sensitivity.snr,
            snr_direct(p.n_cr, p.n_th, p.noise, p.atom_number, p.sensitivity.repetitions).snr);
    }
  } else {
    check("r", p.squeeze, squeeze_parameter(p));
    if (std::isfinite(p.initial_phonons)) {
      check("N_cr", p.n_cr, created_from_seed(p.scheme, p.initial_phonons, p.squeeze));
      check("N_a^min", p.min_atoms, min_atoms_for_state(p.initial_phonons, p.n, p.condensate, params));
    }
    if (p.n_cr > 0.0 && std::isfinite(p.atom_number)) {
      check("SNR", p.sensitivity.snr,
            snr_parametric(p.n_cr, p.n_th, p.noise, p.atom_number, p.initial_phonons,
                           p.sensitivity.repetitions)
                .snr);
    }
  }

  std::vector<AuditEntry> failed;
  for (auto& e : all) {
    if (!(e.relative <= tol)) failed.push_back(e);
  }
  return failed;
}

std::string_view to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::kMass: return "M";
    case SweepParameter::kRMin: return "R_min";
    case SweepParameter::kStroke: return "delta_R";
    case SweepParameter::kLength: return "L";
    case SweepParameter::kDensity: return "rho0";
    case SweepParameter::kTemperature: return "T";
    case SweepParameter::kAtomNumber: return "N_a";
    case SweepParameter::kInteractionTime: return "t_exp";
    case SweepParameter::kRepetitions: return "reps";
  }
  return "?";
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view name) {
  const std::string k = lower(name);
  if (k == "m" || k == "mass") return SweepParameter::kMass;
  if (k == "r_min") return SweepParameter::kRMin;
  if (k == "delta_r" || k == "stroke") return SweepParameter::kStroke;
  if (k == "l" || k == "length") return SweepParameter::kLength;
  if (k == "rho0" || k == "density") return SweepParameter::kDensity;
  if (k == "t" || k == "temperature") return SweepParameter::kTemperature;
  if (k == "n_a" || k == "atom_number") return SweepParameter::kAtomNumber;
  if (k == "t_exp" || k == "interaction_time") return SweepParameter::kInteractionTime;
  if (k == "reps" || k == "repetitions") return SweepParameter::kRepetitions;
  return std::nullopt;
}

std::string sweep_parameter_list() { return "M, R_min, delta_R, L, rho0, T, N_a, t_exp, reps"; }

void SweepAxis::validate() const {
  if (points < 1) throw DomainError("sweep: points must be >= 1");
  if (!std::isfinite(from) || !std::isfinite(to)) throw DomainError("sweep: bounds must be finite");
  if (log && !(from > 0.0 && to > 0.0)) throw DomainError("sweep: log scale needs positive bounds");
}

std::vector<double> SweepAxis::values() const {
  validate();
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    if (points == 1) {
      v[0] = from;
      break;
    }
    const double f = double(i) / double(points - 1);
    v[static_cast<std::size_t>(i)] = log ? from * std::pow(to / from, f) : from + (to - from) * f;
  }
  if (points > 1) v.back() = to;
  return v;
}

PlanRequest with_parameter(PlanRequest req, SweepParameter p, double value) {
  switch (p) {
    case SweepParameter::kMass: req.source.mass = value; break;
    case SweepParameter::kRMin: req.source.r_min = value; break;
    case SweepParameter::kStroke: req.source.stroke = value; break;
    case SweepParameter::kLength: req.constraints.length = value; break;
    case SweepParameter::kDensity: req.constraints.density = value; break;
    case SweepParameter::kTemperature: req.constraints.temperature = value; break;
    case SweepParameter::kAtomNumber: req.constraints.atom_number = value; break;
    case SweepParameter::kInteractionTime: req.constraints.interaction_time = value; break;
    case SweepParameter::kRepetitions: req.constraints.repetitions = value; break;
  }
  return req;
}

std::vector<ExperimentPlan> sweep(const PlanRequest& tmpl, const SweepAxis& axis) {
  std::vector<ExperimentPlan> rows;
  for (double v : axis.values()) rows.push_back(make_plan(with_parameter(tmpl, axis.parameter, v)));
  return rows;
}

}  // namespace becgrav
