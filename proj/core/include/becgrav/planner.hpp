#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "becgrav/condensate.hpp"
#include "becgrav/damping.hpp"
#include "becgrav/grav_source.hpp"
#include "becgrav/metrology.hpp"

namespace becgrav {

enum class Scheme { kDirect, kTwoModeSqueeze, kSingleModeSqueeze, kModeMix };
enum class Target { kAcceleration, kGradient };

// Where the drive amplitudes come from.
//  kGeometry:   a = 2MG dR/R0^3, G = 6MG dR/R0^4.
//  kTableConvention: acceleration taken as the full swing 4MG dR/R0^3 of a(t),
//               gradient as in kGeometry. This is the convention the
//               reference tables were evaluated with.
//  kNominal:    user-supplied values.
enum class AmplitudeSource { kGeometry, kTableConvention, kNominal };

std::string_view to_string(Scheme s);
std::string_view to_string(Target t);
std::string_view to_string(AmplitudeSource s);
std::optional<Scheme> parse_scheme(std::string_view name);
std::optional<Target> parse_target(std::string_view name);
std::optional<AmplitudeSource> parse_amplitude_source(std::string_view name);

// Plans with Omega below this carry a warning.
inline constexpr double kDefaultMinDriveOmega = 2.0 * constants::kPi * 0.5;
// Stroke ratio above which the planner attaches a linearization advisory.
inline constexpr double kStrokeRatioAdvisory = 0.1;
// gamma_total * t above this carries a warning.
inline constexpr double kDampingBudgetWarning = 0.2;

struct PlanConstraints {
  double temperature = 1e-9;                        // K
  double density = 1e19;                            // 1/m^3
  double interaction_time = kDefaultInteractionTime;  // s
  double repetitions = kDefaultRepetitions;
  double snr_target = 10.0;
  double min_drive_omega = kDefaultMinDriveOmega;   // rad/s
  double loss_rate = kDefaultLossRate;              // 1/s
  std::optional<double> length;                     // m, scheme default otherwise
  std::optional<double> atom_number;                // given -> evaluate mode
  std::optional<double> initial_phonons;            // seeded schemes, evaluate mode
  std::optional<double> max_aspect_ratio;           // d/L above this is infeasible
  AmplitudeSource amplitudes = AmplitudeSource::kGeometry;
  double nominal_acceleration = 0.0;                // m/s^2, kNominal only
  double nominal_gradient = 0.0;                    // 1/s^2, kNominal only
  NoiseModel noise;

  void validate() const;
};

struct PlanRequest {
  Scheme scheme = Scheme::kDirect;
  Target target = Target::kAcceleration;
  SourceSphere source;  // omega is set by the planner
  AtomSpecies species;
  PlanConstraints constraints;
};

struct ExperimentPlan {
  Scheme scheme = Scheme::kDirect;
  Target target = Target::kAcceleration;
  AmplitudeSource amplitude_source = AmplitudeSource::kGeometry;
  SourceSphere source;
  CondensateSpec condensate;
  CondensateParams params;
  double r0 = 0.0;
  FieldAmplitudes geometry_amplitudes;  // always from the sphere
  FieldAmplitudes drive;                // amplitudes actually used

  int n = 1;          // measured mode
  int l = 0;          // partner mode, 0 if none
  int n_omega = 1;    // Omega = n_omega * omega_1
  double drive_omega = 0.0;
  double mode_omega = 0.0;  // omega_n

  double atom_number = 0.0;
  double aspect_ratio = 0.0;
  double n_cr = 0.0;
  double n_th = 0.0;
  double squeeze = 0.0;          // r, r_ln or Theta; 0 for direct
  double initial_phonons = 0.0;  // N0, 0 for direct
  double min_atoms = 0.0;        // N_a^min, 0 for direct
  double coupling_limit = 0.0;   // N_lim (direct only)
  double stroke_ratio = 0.0;
  double interaction_time = 0.0;
  double loss_rate = 0.0;
  NoiseModel noise;

  SensitivityReport sensitivity;
  DampingBreakdown damping;
  std::vector<Diagnostic> validity;
  std::vector<std::string> warnings;
  std::vector<std::string> infeasible;

  bool feasible() const { return infeasible.empty(); }
  double length_over_zeta() const { return condensate.length / params.healing_length; }
};

// Default box length: 200 um, 500 um for gradient squeezing and mixing schemes.
double scheme_length(Scheme s, Target t);

ExperimentPlan plan_direct(const PlanRequest& req);
ExperimentPlan plan_two_mode(const PlanRequest& req);
// Throws DomainError for an acceleration target.
ExperimentPlan plan_single_mode(const PlanRequest& req);
ExperimentPlan plan_mode_mix(const PlanRequest& req);
ExperimentPlan make_plan(const PlanRequest& req);

struct AuditEntry {
  std::string field;
  double stored = 0.0;
  double recomputed = 0.0;
  double relative = 0.0;
};

// Recomputes derived fields from the resolved inputs; returns every entry
// with relative difference above tol.
std::vector<AuditEntry> audit_plan(const ExperimentPlan& plan, double tol = 1e-9);

enum class SweepParameter {
  kMass,
  kRMin,
  kStroke,
  kLength,
  kDensity,
  kTemperature,
  kAtomNumber,
  kInteractionTime,
  kRepetitions,
};

std::string_view to_string(SweepParameter p);
std::optional<SweepParameter> parse_sweep_parameter(std::string_view name);
// "M, R_min, delta_R, L, rho0, T, N_a, t_exp, reps"
std::string sweep_parameter_list();

struct SweepAxis {
  SweepParameter parameter = SweepParameter::kMass;
  double from = 0.0;
  double to = 0.0;
  int points = 1;
  bool log = false;

  void validate() const;
  std::vector<double> values() const;
};

PlanRequest with_parameter(PlanRequest req, SweepParameter p, double value);
std::vector<ExperimentPlan> sweep(const PlanRequest& tmpl, const SweepAxis& axis);

}  // namespace becgrav
