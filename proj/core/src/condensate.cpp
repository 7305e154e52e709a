#include "becgrav/condensate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "becgrav/constants.hpp"
#include "becgrav/errors.hpp"

namespace becgrav {

using constants::kBoltzmann;
using constants::kHbar;
using constants::kPi;
using constants::kSqrt2;

AtomSpecies rubidium87() { return {"Rb87", 1.44e-25, 1.3e-7, 1.8e-29 * 1e-12}; }

AtomSpecies ytterbium168() { return {"Yb168", 2.79e-25, 3.35e-7, 4e-30 * 1e-12}; }

std::optional<AtomSpecies> builtin_species(std::string_view name) {
  std::string key;
  for (char c : name) {
    if (c == '-' || c == '_' || c == ' ') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (key == "rb87" || key == "87rb") return rubidium87();
  if (key == "yb168" || key == "168yb") return ytterbium168();
  return std::nullopt;
}

void CondensateSpec::validate() const {
  if (!(species.mass > 0.0)) throw DomainError("condensate: atom mass must be positive");
  if (!(species.interaction > 0.0)) throw DomainError("condensate: interaction must be positive");
  if (!(length > 0.0)) throw DomainError("condensate: L must be positive");
  if (!(density > 0.0)) throw DomainError("condensate: density must be positive");
  if (!(temperature >= 0.0)) throw DomainError("condensate: temperature must be non-negative");
  if (atom_number && !(*atom_number > 0.0)) throw DomainError("condensate: N_a must be positive");
  if (cross_section && !(*cross_section > 0.0)) {
    throw DomainError("condensate: cross-section must be positive");
  }
  if (atom_number && cross_section) {
    const double implied = *cross_section * length * density;
    if (std::abs(implied - *atom_number) > 1e-9 * *atom_number) {
      std::ostringstream msg;
      msg << "condensate: N_a = " << *atom_number << " inconsistent with A L rho0 = " << implied;
      throw DomainError(msg.str());
    }
  }
}

double CondensateSpec::resolved_atom_number() const {
  if (atom_number) return *atom_number;
  if (cross_section) return *cross_section * length * density;
  throw ConfigError("condensate: neither atom number nor cross-section given");
}

double CondensateSpec::resolved_cross_section() const {
  if (cross_section) return *cross_section;
  return resolved_atom_number() / (length * density);
}

CondensateParams derive_params(const CondensateSpec& spec) {
  spec.validate();
  const double m = spec.species.mass;
  CondensateParams p;
  p.healing_length = 1.0 / std::sqrt(spec.species.interaction * spec.density);
  p.sound_speed = kHbar / (kSqrt2 * m * p.healing_length);
  p.chemical_potential = m * p.sound_speed * p.sound_speed;
  const double kt = kBoltzmann * spec.temperature;
  p.depletion_fraction =
      m * kt * kt / (12.0 * spec.density * p.sound_speed * kHbar * kHbar * kHbar);
  return p;
}

double mode_wavenumber(double length, int n) {
  if (n < 1) throw DomainError("mode index must be >= 1");
  if (!(length > 0.0)) throw DomainError("mode_wavenumber: L must be positive");
  return n * kPi / length;
}

double mode_frequency(const CondensateParams& params, double length, int n) {
  return params.sound_speed * mode_wavenumber(length, n);
}

double length_for_frequency(const AtomSpecies& species, double density, double omega1) {
  if (!(omega1 > 0.0)) throw DomainError("length_for_frequency: omega1 must be positive");
  return kPi / omega1 * (kHbar / species.mass) *
         std::sqrt(species.interaction * density / 2.0);
}

double thermal_occupation(double omega, double temperature) {
  if (!(omega > 0.0)) throw DomainError("thermal_occupation: omega must be positive");
  return kBoltzmann * temperature / (kHbar * omega);
}

double aspect_ratio(double atom_number, double density, double length) {
  return 2.0 * std::sqrt(atom_number / (kPi * density * length * length * length));
}

CondensateGeometry geometry(const CondensateSpec& spec) {
  spec.validate();
  CondensateGeometry g;
  g.atom_number = spec.resolved_atom_number();
  g.cross_section = spec.resolved_cross_section();
  g.aspect_ratio = aspect_ratio(g.atom_number, spec.density, spec.length);
  return g;
}

Verdict classify_ratio(double ratio) {
  if (!std::isfinite(ratio) || ratio > 0.5) return Verdict::kFail;
  return ratio < 0.1 ? Verdict::kPass : Verdict::kWarn;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kWarn: return "warn";
    case Verdict::kFail: return "fail";
  }
  return "?";
}

std::vector<Diagnostic> validity_report(const CondensateSpec& spec,
                                        const CondensateParams& params,
                                        std::span<const int> modes) {
  std::vector<Diagnostic> out;
  for (int n : modes) {
    const double r = mode_wavenumber(spec.length, n) * params.healing_length;
    out.push_back({"k_" + std::to_string(n) + " zeta", r, classify_ratio(r)});
  }
  const double t_ratio = kBoltzmann * spec.temperature / params.chemical_potential;
  out.push_back({"kB T / mu", t_ratio, classify_ratio(t_ratio)});
  const double z_ratio = params.healing_length / spec.length;
  out.push_back({"zeta / L", z_ratio, classify_ratio(z_ratio)});
  if (spec.temperature > 0.0) {
    for (int n : modes) {
      const double w = mode_frequency(params, spec.length, n);
      const double r = kHbar * w / (kBoltzmann * spec.temperature);
      out.push_back({"hbar omega_" + std::to_string(n) + " / kB T", r, classify_ratio(r)});
    }
  }
  return out;
}

}  // namespace becgrav
