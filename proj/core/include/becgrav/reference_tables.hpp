#pragma once

#include <string>
#include <vector>

#include "becgrav/planner.hpp"

namespace becgrav {

enum class ToleranceKind { kFactor, kRelative };

struct Tolerance {
  ToleranceKind kind = ToleranceKind::kFactor;
  double value = 2.0;  // factor, or relative difference

  bool accepts(double computed, double printed) const;
};

// One printed table row: source geometry and the published column values.
struct ReferenceRow {
  int table = 1;
  Scheme scheme = Scheme::kDirect;
  Target target = Target::kAcceleration;
  std::string species;
  double source_mass = 0.0;  // kg
  double r_min = 0.0;        // m
  double stroke = 0.0;       // m
  std::vector<std::pair<std::string, double>> printed;
};

// 4 rows of the direct-driving table, 8 two-mode rows, 4 single-mode rows.
const std::vector<ReferenceRow>& reference_rows();

struct TableCell {
  std::string column;
  double computed = 0.0;
  double printed = 0.0;
  Tolerance tolerance;
  bool pass = false;
};

struct TableRow {
  const ReferenceRow* reference = nullptr;
  ExperimentPlan plan;
  std::vector<TableCell> cells;

  bool pass() const;
  std::string label() const;
};

struct TablesReport {
  AmplitudeSource amplitudes = AmplitudeSource::kTableConvention;
  std::vector<TableRow> rows;

  bool all_pass() const;
  std::size_t failed_cells() const;
};

PlanRequest reference_request(const ReferenceRow& row, AmplitudeSource amplitudes);
TablesReport reproduce_tables(AmplitudeSource amplitudes = AmplitudeSource::kTableConvention);

}  // namespace becgrav
