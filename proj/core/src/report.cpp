#include "becgrav/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "becgrav/constants.hpp"

namespace becgrav {

using constants::kPi;

std::string format_number(double v, int precision) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

void line(std::ostream& os, const char* name, double v, const char* unit = "") {
  os << "  " << pad(name, 14) << format_number(v, 4);
  if (*unit) os << ' ' << unit;
  os << '\n';
}

}  // namespace

std::string plan_csv_row(const ExperimentPlan& p) {
  const std::string sep = ",";
  return std::string(to_string(p.scheme)) + sep + p.condensate.species.name + sep +
         format_number(p.source.mass) + sep + format_number(p.r0) + sep +
         format_number(p.drive_omega / (2.0 * kPi)) + sep + std::to_string(p.n) + sep +
         std::to_string(p.l) + sep + format_number(p.atom_number) + sep +
         format_number(p.condensate.length) + sep + format_number(p.aspect_ratio) + sep +
         format_number(p.params.healing_length) + sep + format_number(p.n_cr) + sep +
         format_number(p.n_th) + sep + format_number(p.squeeze) + sep +
         format_number(p.sensitivity.snr);
}

void write_plans_csv(std::ostream& os, const std::vector<ExperimentPlan>& plans) {
  os << kPlanCsvHeader << '\n';
  for (const auto& p : plans) os << plan_csv_row(p) << '\n';
}

void write_plan_text(std::ostream& os, const ExperimentPlan& p) {
  os << "plan " << to_string(p.scheme) << " / " << to_string(p.target) << " / "
     << p.condensate.species.name << (p.feasible() ? "" : "  [INFEASIBLE]") << '\n';
  os << "source\n";
  line(os, "M", p.source.mass, "kg");
  line(os, "radius", p.source.radius(), "m");
  line(os, "R_min", p.source.r_min, "m");
  line(os, "delta_R", p.source.stroke, "m");
  line(os, "R0", p.r0, "m");
  line(os, "delta_R/R0", p.stroke_ratio);
  line(os, "a_Omega geo", p.geometry_amplitudes.accel_osc, "m/s^2");
  line(os, "G_Omega geo", p.geometry_amplitudes.gradient_osc, "1/s^2");
  os << "  " << pad("amplitudes", 14) << to_string(p.amplitude_source) << '\n';
  line(os, "a_Omega used", p.drive.accel_osc, "m/s^2");
  line(os, "G_Omega used", p.drive.gradient_osc, "1/s^2");
  os << "condensate\n";
  line(os, "L", p.condensate.length, "m");
  line(os, "rho0", p.condensate.density, "1/m^3");
  line(os, "T", p.condensate.temperature, "K");
  line(os, "zeta", p.params.healing_length, "m");
  line(os, "L/zeta", p.length_over_zeta());
  line(os, "c0", p.params.sound_speed, "m/s");
  line(os, "N_a", p.atom_number);
  line(os, "d/L", p.aspect_ratio);
  os << "drive\n";
  os << "  " << pad("n, l, n_Omega", 14) << p.n << ", " << p.l << ", " << p.n_omega << '\n';
  line(os, "Omega/2pi", p.drive_omega / (2.0 * kPi), "Hz");
  line(os, "omega_n/2pi", p.mode_omega / (2.0 * kPi), "Hz");
  os << "prediction\n";
  line(os, "N_cr", p.n_cr);
  line(os, "N_th", p.n_th);
  if (p.scheme == Scheme::kDirect) {
    line(os, "N_lim", p.coupling_limit);
  } else {
    line(os, p.scheme == Scheme::kModeMix ? "Theta" : "r", p.squeeze);
    line(os, "N_0", p.initial_phonons);
    line(os, "N_a^min", p.min_atoms);
  }
  line(os, "SNR", p.sensitivity.snr);
  line(os, "reps", p.sensitivity.repetitions);
  line(os, "var thermal", p.sensitivity.thermal);
  line(os, "var detection", p.sensitivity.detection);
  line(os, "var atoms", p.sensitivity.atoms);
  line(os, "var initial", p.sensitivity.initial);
  os << "damping (" << to_string(p.damping.regime) << ")\n";
  line(os, "landau", p.damping.landau, "1/s");
  line(os, "beliaev", p.damping.beliaev, "1/s");
  line(os, "loss", p.damping.loss, "1/s");
  line(os, "total", p.damping.total, "1/s");
  os << "validity\n";
  for (const auto& d : p.validity) {
    os << "  " << pad(d.criterion, 22) << pad(format_number(d.ratio, 3), 12) << to_string(d.verdict)
       << '\n';
  }
  for (const auto& w : p.warnings) os << "warning: " << w << '\n';
  for (const auto& r : p.infeasible) os << "infeasible: " << r << '\n';
}

void write_plans_text(std::ostream& os, const std::vector<ExperimentPlan>& plans) {
  const char* cols[] = {"scheme", "species", "M_kg", "Omega_Hz", "n", "l", "N_a",
                        "L_m", "d/L", "N_cr", "N_th", "r", "SNR"};
  for (const char* c : cols) os << pad(c, 12);
  os << '\n';
  for (const auto& p : plans) {
    const std::string scheme(to_string(p.scheme));
    os << pad(scheme.substr(0, 11), 12) << pad(p.condensate.species.name, 12)
       << pad(format_number(p.source.mass, 4), 12)
       << pad(format_number(p.drive_omega / (2.0 * kPi), 4), 12) << pad(std::to_string(p.n), 12)
       << pad(std::to_string(p.l), 12) << pad(format_number(p.atom_number, 4), 12)
       << pad(format_number(p.condensate.length, 4), 12)
       << pad(format_number(p.aspect_ratio, 4), 12) << pad(format_number(p.n_cr, 4), 12)
       << pad(format_number(p.n_th, 4), 12) << pad(format_number(p.squeeze, 4), 12)
       << format_number(p.sensitivity.snr, 4) << (p.feasible() ? "" : "  infeasible") << '\n';
  }
}

namespace {

std::string tolerance_text(const Tolerance& t) {
  if (t.kind == ToleranceKind::kFactor) return "x" + format_number(t.value, 3);
  return format_number(100.0 * t.value, 3) + "%";
}

}  // namespace

void write_tables_text(std::ostream& os, const TablesReport& report) {
  os << "amplitude convention: " << to_string(report.amplitudes) << '\n';
  int table = 0;
  for (const auto& row : report.rows) {
    if (row.reference->table != table) {
      table = row.reference->table;
      os << '\n' << "table " << table << '\n';
    }
    os << row.label() << "  R0 = " << format_number(row.plan.r0, 4)
       << " m  delta_R/R0 = " << format_number(row.plan.stroke_ratio, 3)
       << "  a_geo = " << format_number(row.plan.geometry_amplitudes.accel_osc, 3)
       << "  G_geo = " << format_number(row.plan.geometry_amplitudes.gradient_osc, 3)
       << (row.pass() ? "  PASS" : "  FAIL") << '\n';
    for (const auto& c : row.cells) {
      os << "    " << pad(c.column, 12) << pad(format_number(c.computed, 4), 12)
         << pad(format_number(c.printed, 4), 12) << pad(tolerance_text(c.tolerance), 8)
         << (c.pass ? "ok" : "MISS") << '\n';
    }
    for (const auto& w : row.plan.warnings) os << "    warning: " << w << '\n';
  }
  os << '\n'
     << report.rows.size() << " rows, " << report.failed_cells() << " cells outside tolerance\n";
}

void write_tables_csv(std::ostream& os, const TablesReport& report) {
  os << "table,target,species,M_kg,column,computed,printed,tolerance,pass\n";
  for (const auto& row : report.rows) {
    const ReferenceRow& r = *row.reference;
    for (const auto& c : row.cells) {
      os << r.table << ',' << to_string(r.target) << ',' << r.species << ','
         << format_number(r.source_mass) << ',' << c.column << ',' << format_number(c.computed)
         << ',' << format_number(c.printed) << ',' << tolerance_text(c.tolerance) << ','
         << (c.pass ? 1 : 0) << '\n';
    }
  }
}

std::vector<DampingRow> damping_table(const CondensateSpec& spec, int max_mode, double loss_rate) {
  spec.validate();
  const CondensateParams params = derive_params(spec);
  std::vector<DampingRow> rows;
  for (int n = 1; n <= max_mode; ++n) {
    DampingRow r;
    r.n = n;
    r.omega = mode_frequency(params, spec.length, n);
    r.rates = total_rate(params, spec, n, spec.temperature, loss_rate);
    rows.push_back(r);
  }
  return rows;
}

void write_damping_text(std::ostream& os, const CondensateSpec& spec,
                        const std::vector<DampingRow>& rows) {
  const CondensateParams params = derive_params(spec);
  os << "damping " << spec.species.name << "  L = " << format_number(spec.length, 4)
     << " m  rho0 = " << format_number(spec.density, 4) << " 1/m^3  T = "
     << format_number(spec.temperature, 4) << " K  kB T/mu = "
     << format_number(constants::kBoltzmann * spec.temperature / params.chemical_potential, 4)
     << '\n';
  const char* cols[] = {"n", "omega_Hz", "landau", "beliaev", "loss", "total", "regime"};
  for (const char* c : cols) os << pad(c, 12);
  os << '\n';
  for (const auto& r : rows) {
    os << pad(std::to_string(r.n), 12) << pad(format_number(r.omega / (2.0 * kPi), 4), 12)
       << pad(format_number(r.rates.landau, 4), 12) << pad(format_number(r.rates.beliaev, 4), 12)
       << pad(format_number(r.rates.loss, 4), 12) << pad(format_number(r.rates.total, 4), 12)
       << to_string(r.rates.regime) << '\n';
  }
  if (spec.species.three_body_loss > 0.0) {
    os << "three-body half-life "
       << format_number(three_body_half_life(spec.species.three_body_loss, spec.density), 4)
       << " s\n";
  }
}

void write_damping_csv(std::ostream& os, const std::vector<DampingRow>& rows) {
  os << "n,omega_Hz,landau,beliaev,loss,total,regime\n";
  for (const auto& r : rows) {
    os << r.n << ',' << format_number(r.omega / (2.0 * kPi)) << ','
       << format_number(r.rates.landau) << ',' << format_number(r.rates.beliaev) << ','
       << format_number(r.rates.loss) << ',' << format_number(r.rates.total) << ','
       << to_string(r.rates.regime) << '\n';
  }
}

}  // namespace becgrav
