#include <set>

#include "doctest.h"

#include "becgrav/reference_tables.hpp"

using namespace becgrav;

TEST_CASE("reference rows") {
  const auto& rows = reference_rows();
  REQUIRE(rows.size() == 16);
  int per_table[4] = {0, 0, 0, 0};
  for (const auto& r : rows) {
    REQUIRE(r.table >= 1);
    REQUIRE(r.table <= 3);
    ++per_table[r.table];
    CHECK_FALSE(r.printed.empty());
    CHECK(r.stroke > 0.0);
  }
  CHECK(per_table[1] == 4);
  CHECK(per_table[2] == 8);
  CHECK(per_table[3] == 4);
}

TEST_CASE("tolerance") {
  const Tolerance factor{ToleranceKind::kFactor, 2.0};
  CHECK(factor.accepts(1.9, 1.0));
  CHECK(factor.accepts(0.51, 1.0));
  CHECK_FALSE(factor.accepts(2.1, 1.0));
  CHECK_FALSE(factor.accepts(-1.0, 1.0));
  const Tolerance rel{ToleranceKind::kRelative, 0.1};
  CHECK(rel.accepts(1.05, 1.0));
  CHECK_FALSE(rel.accepts(1.2, 1.0));
}

TEST_CASE("table convention reproduces tables 1 and 3") {
  const TablesReport rep = reproduce_tables(AmplitudeSource::kTableConvention);
  REQUIRE(rep.rows.size() == 16);
  std::set<std::string> labels;
  for (const TableRow& row : rep.rows) {
    labels.insert(row.label());
    CHECK(row.plan.damping.total * row.plan.interaction_time < 0.2);
    if (row.reference->table == 2) continue;
    for (const TableCell& c : row.cells) {
      INFO(row.label() << " " << c.column << ": " << c.computed << " vs " << c.printed);
      CHECK(c.pass);
    }
  }
  CHECK(labels.size() == 16);
}

TEST_CASE("table 2 failures are confined to N_th") {
  const TablesReport rep = reproduce_tables(AmplitudeSource::kTableConvention);
  for (const TableRow& row : rep.rows) {
    if (row.reference->table != 2) continue;
    for (const TableCell& c : row.cells) {
      if (c.column == "N_th") continue;
      INFO(row.label() << " " << c.column << ": " << c.computed << " vs " << c.printed);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("geometry amplitudes halve the acceleration") {
  const auto& row = reference_rows().front();
  const ExperimentPlan geo = make_plan(reference_request(row, AmplitudeSource::kGeometry));
  const ExperimentPlan tab = make_plan(reference_request(row, AmplitudeSource::kTableConvention));
  CHECK(tab.drive.accel_osc == doctest::Approx(2.0 * geo.drive.accel_osc).epsilon(1e-12));
  CHECK(tab.drive.gradient_osc == doctest::Approx(geo.drive.gradient_osc).epsilon(1e-12));
}
