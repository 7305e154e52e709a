#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "becgrav/damping.hpp"
#include "becgrav/planner.hpp"
#include "becgrav/reference_tables.hpp"

namespace becgrav {

inline constexpr const char* kPlanCsvHeader =
    "scheme,species,M_kg,R0_m,Omega_Hz,n,l,N_a,L_m,d_over_L,zeta_m,N_cr,N_th,r,SNR";

// printf %.{precision}g; stable across runs and platforms using the same libc.
std::string format_number(double v, int precision = 6);

std::string plan_csv_row(const ExperimentPlan& plan);
void write_plans_csv(std::ostream& os, const std::vector<ExperimentPlan>& plans);
void write_plan_text(std::ostream& os, const ExperimentPlan& plan);
void write_plans_text(std::ostream& os, const std::vector<ExperimentPlan>& plans);

void write_tables_text(std::ostream& os, const TablesReport& report);
void write_tables_csv(std::ostream& os, const TablesReport& report);

struct DampingRow {
  int n = 1;
  double omega = 0.0;
  DampingBreakdown rates;
};

std::vector<DampingRow> damping_table(const CondensateSpec& spec, int max_mode, double loss_rate);
void write_damping_text(std::ostream& os, const CondensateSpec& spec,
                        const std::vector<DampingRow>& rows);
void write_damping_csv(std::ostream& os, const std::vector<DampingRow>& rows);

}  // namespace becgrav
