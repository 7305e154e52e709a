#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace becgrav {

struct AtomSpecies {
  std::string name;
  double mass = 0.0;             // kg
  double interaction = 0.0;      // m, lambda = 8 pi a_scatt
  double three_body_loss = 0.0;  // m^6/s, zero if unknown
};

AtomSpecies rubidium87();
AtomSpecies ytterbium168();
// Built-in species by (case-insensitive) name: "Rb87", "Rb-87", "Yb168", ...
std::optional<AtomSpecies> builtin_species(std::string_view name);

struct CondensateSpec {
  AtomSpecies species;
  double length = 0.0;                 // m
  double density = 0.0;                // 1/m^3
  double temperature = 0.0;            // K
  std::optional<double> atom_number;
  std::optional<double> cross_section; // m^2

  void validate() const;
  // N_a, either given or from the cross-section (A L rho0).
  double resolved_atom_number() const;
  double resolved_cross_section() const;
};

struct CondensateParams {
  double healing_length = 0.0;      // zeta, m
  double sound_speed = 0.0;         // c0, m/s
  double chemical_potential = 0.0;  // mu, J
  double depletion_fraction = 0.0;  // thermal depletion magnitude
};

CondensateParams derive_params(const CondensateSpec& spec);

double mode_wavenumber(double length, int n);
double mode_frequency(const CondensateParams& params, double length, int n);
// Box length whose fundamental mode sits at omega1.
double length_for_frequency(const AtomSpecies& species, double density, double omega1);
// Rayleigh-Jeans occupation kB T / (hbar omega).
double thermal_occupation(double omega, double temperature);

struct CondensateGeometry {
  double atom_number = 0.0;
  double aspect_ratio = 0.0;   // d / L for a circular cross-section
  double cross_section = 0.0;  // m^2
};

CondensateGeometry geometry(const CondensateSpec& spec);
// d/L for given N_a without building a spec.
double aspect_ratio(double atom_number, double density, double length);

enum class Verdict { kPass, kWarn, kFail };

struct Diagnostic {
  std::string criterion;
  double ratio = 0.0;
  Verdict verdict = Verdict::kPass;
};

// ratio < 0.1 pass, up to 0.5 warn, above fail.
Verdict classify_ratio(double ratio);
std::string_view to_string(Verdict v);

std::vector<Diagnostic> validity_report(const CondensateSpec& spec,
                                        const CondensateParams& params,
                                        std::span<const int> modes);

}  // namespace becgrav
