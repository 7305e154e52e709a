#include "becgrav/reference_tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "becgrav/errors.hpp"

namespace becgrav {

using constants::kPi;

bool Tolerance::accepts(double computed, double printed) const {
  if (!std::isfinite(computed) || !(computed > 0.0) || !(printed > 0.0)) return false;
  if (kind == ToleranceKind::kFactor) {
    const double ratio = computed / printed;
    return ratio <= value && ratio >= 1.0 / value;
  }
  return std::abs(computed - printed) <= value * printed;
}

namespace {

std::vector<ReferenceRow> build_rows() {
  const double g = 1e-3, mm = 1e-3;
  std::vector<ReferenceRow> rows;
  auto add = [&](int table, Scheme s, Target t, const char* sp, double m, double rmin, double dr,
                 std::vector<std::pair<std::string, double>> printed) {
    rows.push_back({table, s, t, sp, m, rmin, dr, std::move(printed)});
  };
  const auto D = Scheme::kDirect, TM = Scheme::kTwoModeSqueeze, SM = Scheme::kSingleModeSqueeze;
  const auto A = Target::kAcceleration, G = Target::kGradient;

  add(1, D, A, "Rb87", 200 * g, 1 * mm, 2 * mm,
      {{"a_Omega", 2e-8}, {"Omega/2pi", 1.5}, {"N_a", 9e5}, {"L/zeta", 230}, {"d/L", 0.12},
       {"N_cr", 0.7}, {"N_lim", 1.3}, {"N_th", 14}});
  add(1, D, A, "Yb168", 200 * g, 1 * mm, 2 * mm,
      {{"a_Omega", 2e-8}, {"Omega/2pi", 1.2}, {"N_a", 5e5}, {"L/zeta", 370}, {"d/L", 0.08},
       {"N_cr", 0.9}, {"N_lim", 0.16}, {"N_th", 17}});
  add(1, D, A, "Rb87", 0.2 * g, 0.1 * mm, 0.2 * mm,
      {{"a_Omega", 2e-9}, {"Omega/2pi", 1.5}, {"N_a", 1e8}, {"L/zeta", 230}, {"d/L", 1.4},
       {"N_cr", 0.7}, {"N_lim", 180}, {"N_th", 14}});
  add(1, D, A, "Yb168", 0.2 * g, 0.1 * mm, 0.2 * mm,
      {{"a_Omega", 2e-9}, {"Omega/2pi", 1.2}, {"N_a", 6e7}, {"L/zeta", 370}, {"d/L", 1.0},
       {"N_cr", 0.9}, {"N_lim", 23}, {"N_th", 17}});

  add(2, TM, A, "Rb87", 200 * g, 1 * mm, 2 * mm,
      {{"a_Omega", 2e-8}, {"Omega/2pi", 4.4}, {"N_a^min", 5e4}, {"r", 0.3}, {"N_cr", 0.4},
       {"N_0", 5}, {"N_th", 4}});
  add(2, TM, A, "Yb168", 200 * g, 1 * mm, 2 * mm,
      {{"a_Omega", 2e-8}, {"Omega/2pi", 3.7}, {"N_a^min", 1e4}, {"r", 0.8}, {"N_cr", 0.4},
       {"N_0", 1}, {"N_th", 4}});
  add(2, TM, A, "Rb87", 0.2 * g, 0.1 * mm, 0.2 * mm,
      {{"a_Omega", 2e-9}, {"Omega/2pi", 4.4}, {"N_a^min", 7e6}, {"r", 0.02}, {"N_cr", 0.4},
       {"N_0", 700}, {"N_th", 4}});
  add(2, TM, A, "Yb168", 0.2 * g, 0.1 * mm, 0.2 * mm,
      {{"a_Omega", 2e-9}, {"Omega/2pi", 3.7}, {"N_a^min", 1e6}, {"r", 0.07}, {"N_cr", 0.4},
       {"N_0", 100}, {"N_th", 4}});
  add(2, TM, G, "Rb87", 200 * g, 1 * mm, 2 * mm,
      {{"G_Omega", 2e-6}, {"Omega/2pi", 2.4}, {"N_a^min", 1e8}, {"r", 0.008}, {"N_cr", 0.6},
       {"N_0", 9e3}, {"N_th", 4}});
  add(2, TM, G, "Yb168", 200 * g, 1 * mm, 2 * mm,
      {{"G_Omega", 2e-6}, {"Omega/2pi", 2.0}, {"N_a^min", 3e7}, {"r", 0.02}, {"N_cr", 0.7},
       {"N_0", 1e3}, {"N_th", 5}});
  add(2, TM, G, "Rb87", 0.2 * g, 0.1 * mm, 0.2 * mm,
      {{"G_Omega", 1.2e-6}, {"Omega/2pi", 2.4}, {"N_a^min", 4e8}, {"r", 0.005}, {"N_cr", 0.6},
       {"N_0", 2e4}, {"N_th", 4}});
  add(2, TM, G, "Yb168", 0.2 * g, 0.1 * mm, 0.2 * mm,
      {{"G_Omega", 1.2e-6}, {"Omega/2pi", 2.0}, {"N_a^min", 8e7}, {"r", 0.01}, {"N_cr", 0.7},
       {"N_0", 3e3}, {"N_th", 5}});

  add(3, SM, G, "Rb87", 200 * g, 1 * mm, 2 * mm,
      {{"G_Omega", 2e-6}, {"Omega/2pi", 1.2}, {"N_a^min", 4e6}, {"r", 0.01}, {"N_cr", 1.8},
       {"N_0", 80}, {"N_th", 35}});
  add(3, SM, G, "Yb168", 200 * g, 1 * mm, 2 * mm,
      {{"G_Omega", 2e-6}, {"Omega/2pi", 1.0}, {"N_a^min", 3e6}, {"r", 0.03}, {"N_cr", 2.1},
       {"N_0", 30}, {"N_th", 42}});
  add(3, SM, G, "Rb87", 0.2 * g, 0.1 * mm, 0.2 * mm,
      {{"G_Omega", 1.2e-6}, {"Omega/2pi", 1.2}, {"N_a^min", 7e6}, {"r", 0.007}, {"N_cr", 1.8},
       {"N_0", 130}, {"N_th", 35}});
  add(3, SM, G, "Yb168", 0.2 * g, 0.1 * mm, 0.2 * mm,
      {{"G_Omega", 1.2e-6}, {"Omega/2pi", 1.0}, {"N_a^min", 4e6}, {"r", 0.02}, {"N_cr", 2.1},
       {"N_0", 50}, {"N_th", 40}});
  return rows;
}

Tolerance tolerance_for(int table, const std::string& column) {
  if (table == 1 && (column == "L/zeta" || column == "d/L" || column == "N_th")) {
    return {ToleranceKind::kRelative, 0.10};
  }
  if (table != 1 && column == "N_th") return {ToleranceKind::kRelative, 0.15};
  return {ToleranceKind::kFactor, 2.0};
}

double computed_value(const ExperimentPlan& p, const std::string& column) {
  if (column == "a_Omega") return p.drive.accel_osc;
  if (column == "G_Omega") return p.drive.gradient_osc;
  if (column == "Omega/2pi") return p.drive_omega / (2.0 * kPi);
  if (column == "N_a" || column == "N_a^min") return p.atom_number;
  if (column == "L/zeta") return p.length_over_zeta();
  if (column == "d/L") return p.aspect_ratio;
  if (column == "N_cr") return p.n_cr;
  if (column == "N_lim") return p.coupling_limit;
  if (column == "N_th") return p.n_th;
  if (column == "r") return p.squeeze;
  if (column == "N_0") return p.initial_phonons;
  throw DomainError("reference tables: unknown column " + column);
}

}  // namespace

const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = build_rows();
  return rows;
}

bool TableRow::pass() const {
  return std::all_of(cells.begin(), cells.end(), [](const TableCell& c) { return c.pass; });
}

std::string TableRow::label() const {
  char buf[96];
  const ReferenceRow& r = *reference;
  std::snprintf(buf, sizeof buf, "table %d %s %s %g g", r.table,
                std::string(to_string(r.target)).c_str(), r.species.c_str(), r.source_mass * 1e3);
  return buf;
}

bool TablesReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.pass(); });
}

std::size_t TablesReport::failed_cells() const {
  std::size_t n = 0;
  for (const auto& r : rows) {
    n += static_cast<std::size_t>(
        std::count_if(r.cells.begin(), r.cells.end(), [](const TableCell& c) { return !c.pass; }));
  }
  return n;
}

PlanRequest reference_request(const ReferenceRow& row, AmplitudeSource amplitudes) {
  PlanRequest req;
  req.scheme = row.scheme;
  req.target = row.target;
  auto species = builtin_species(row.species);
  if (!species) throw DomainError("reference tables: unknown species " + row.species);
  req.species = *species;
  req.source.mass = row.source_mass;
  req.source.r_min = row.r_min;
  req.source.stroke = row.stroke;
  req.constraints.amplitudes = amplitudes;
  return req;
}

TablesReport reproduce_tables(AmplitudeSource amplitudes) {
  TablesReport report;
  report.amplitudes = amplitudes;
  for (const auto& ref : reference_rows()) {
    TableRow row;
    row.reference = &ref;
    row.plan = make_plan(reference_request(ref, amplitudes));
    for (const auto& [column, printed] : ref.printed) {
      TableCell cell;
      cell.column = column;
      cell.printed = printed;
      cell.computed = computed_value(row.plan, column);
      cell.tolerance = tolerance_for(ref.table, column);
      cell.pass = cell.tolerance.accepts(cell.computed, printed);
      row.cells.push_back(cell);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace becgrav
