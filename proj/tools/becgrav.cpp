// becgrav: plan, sweep and inspect phonon-based gravity measurements.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "becgrav/config.hpp"
#include "becgrav/damping.hpp"
#include "becgrav/errors.hpp"
#include "becgrav/mode_dynamics.hpp"
#include "becgrav/planner.hpp"
#include "becgrav/reference_tables.hpp"
#include "becgrav/report.hpp"
#include "becgrav/state_script.hpp"

namespace {

using namespace becgrav;

enum Exit { kOk = 0, kUsage = 2, kInfeasible = 3, kNumeric = 4 };

struct Options {
  std::string config;
  std::string out;
  std::string format = "txt";
  std::string script;
  std::string amplitudes = "table";
  int modes = 0;
};

RunConfig require_config(const Options& o) {
  if (o.config.empty()) throw ConfigError("--config is required for this command");
  return load_config(o.config);
}

void require_plan_inputs(const RunConfig& cfg) {
  if (!cfg.has_source) throw ConfigError(cfg.origin + ": [source] section missing");
  if (!cfg.has_species) throw ConfigError(cfg.origin + ": [condensate] species missing");
}

int run_plan(const Options& o, std::ostream& os) {
  const RunConfig cfg = require_config(o);
  require_plan_inputs(cfg);
  const ExperimentPlan p = make_plan(cfg.request);
  if (o.format == "csv") {
    write_plans_csv(os, {p});
  } else {
    write_plan_text(os, p);
  }
  return p.feasible() ? kOk : kInfeasible;
}

int run_sweep(const Options& o, std::ostream& os) {
  const RunConfig cfg = require_config(o);
  require_plan_inputs(cfg);
  if (!cfg.sweep) throw ConfigError(cfg.origin + ": [sweep] section missing");
  const auto rows = sweep(cfg.request, *cfg.sweep);
  if (o.format == "csv") {
    write_plans_csv(os, rows);
  } else {
    os << "sweep " << to_string(cfg.sweep->parameter) << " over " << rows.size() << " points\n";
    write_plans_text(os, rows);
  }
  return kOk;
}

int run_tables(const Options& o, std::ostream& os) {
  auto src = parse_amplitude_source(o.amplitudes);
  if (!src) throw ConfigError("--amplitudes must be table, geometry or nominal");
  if (*src == AmplitudeSource::kNominal) throw ConfigError("--amplitudes nominal needs a config");
  const TablesReport report = reproduce_tables(*src);
  if (o.format == "csv") {
    write_tables_csv(os, report);
  } else {
    write_tables_text(os, report);
  }
  return kOk;
}

int run_damping(const Options& o, std::ostream& os) {
  const RunConfig cfg = require_config(o);
  const CondensateSpec spec = condensate_from(cfg);
  const int modes = o.modes > 0 ? o.modes : cfg.damping_modes;
  const auto rows = damping_table(spec, modes, cfg.request.constraints.loss_rate);
  if (o.format == "csv") {
    write_damping_csv(os, rows);
  } else {
    write_damping_text(os, spec, rows);
  }
  return kOk;
}

int run_simulate(const Options& o, std::ostream& os) {
  const RunConfig cfg = require_config(o);
  require_plan_inputs(cfg);
  const SimulateConfig& sim = cfg.simulate;
  CoupledModeProblem prob;
  prob.modes = sim.modes;
  prob.spec = condensate_from(cfg);
  prob.params = derive_params(prob.spec);
  const double w1 = mode_frequency(prob.params, prob.spec.length, 1);
  if (sim.drive_omega) {
    prob.drive_omega = *sim.drive_omega;
  } else {
    prob.drive_omega = w1 * sim.drive_multiple.value_or(sim.modes.front());
  }
  SourceSphere source = cfg.request.source;
  source.omega = prob.drive_omega;
  source.validate();
  const double r0 = equilibrium_distance(source, prob.spec.length);
  prob.amplitudes = oscillation_amplitudes(source, r0);
  const auto& pc = cfg.request.constraints;
  if (pc.amplitudes == AmplitudeSource::kTableConvention) prob.amplitudes.accel_osc *= 2.0;
  if (pc.amplitudes == AmplitudeSource::kNominal) {
    prob.amplitudes.accel_osc = pc.nominal_acceleration;
    prob.amplitudes.gradient_osc = pc.nominal_gradient;
  }
  prob.drive_phase = sim.phase;
  prob.direct = sim.direct;
  prob.parametric = sim.parametric;
  prob.coupling = sim.coupling;
  if (!sim.damping.empty()) {
    prob.damping = sim.damping;
  } else {
    for (int n : sim.modes) {
      prob.damping.push_back(
          total_rate(prob.params, prob.spec, n, prob.spec.temperature, pc.loss_rate).total);
    }
  }
  std::vector<double> initial(2 * sim.modes.size(), 0.0);
  for (std::size_t i = 0; i < sim.modes.size(); ++i) {
    if (!sim.initial_g.empty()) initial[2 * i] = sim.initial_g[i];
    if (!sim.initial_gdot.empty()) initial[2 * i + 1] = sim.initial_gdot[i];
  }
  const double step = sim.step.value_or(max_integration_step(prob));
  const ModeTrajectory traj =
      integrate_coupled_modes(prob, initial, 0.0, sim.t_end, step, sim.sample_every);
  if (o.format == "csv") {
    traj.write_csv(os);
  } else {
    os << "simulate " << prob.spec.species.name << "  Omega/2pi = "
       << format_number(prob.drive_omega / (2.0 * constants::kPi), 6) << " Hz  step = "
       << format_number(step, 4) << " s  samples = " << traj.time.size() << '\n';
    os << "mode        omega_Hz    gamma       final_g     final_gdot  max|g|\n";
    for (std::size_t i = 0; i < traj.modes.size(); ++i) {
      double peak = 0.0;
      for (const auto& s : traj.state) peak = std::max(peak, std::abs(s[2 * i]));
      const auto& last = traj.state.back();
      const double gamma = prob.damping.size() == 1 ? prob.damping[0] : prob.damping[i];
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-12d%-12.4g%-12.4g%-12.4g%-12.4g%.4g\n", traj.modes[i],
                    mode_frequency(prob.params, prob.spec.length, traj.modes[i]) /
                        (2.0 * constants::kPi),
                    gamma, last[2 * i], last[2 * i + 1], peak);
      os << buf;
      if (exceeds_perturbative_limit(peak)) {
        os << "warning: mode " << traj.modes[i] << " amplitude above the perturbative limit\n";
      }
    }
  }
  return kOk;
}

int run_state(const Options& o, std::ostream& os) {
  if (o.script.empty()) throw ConfigError("state needs a script file");
  std::ifstream in(o.script);
  if (!in) throw ConfigError("cannot open script '" + o.script + "'");
  const auto cmds = parse_state_script(in, o.script);
  const StateSession s = run_state_script(cmds, os);
  if (o.format == "csv") {
    s.state.write_csv(os);
  } else {
    os << "modes " << s.state.modes() << "  total phonons "
       << format_number(s.state.total_phonon_number(), 10) << "  nu_min "
       << format_number(s.state.min_symplectic_eigenvalue(), 12) << '\n';
    for (int k = 0; k < s.state.modes(); ++k) {
      os << "slot " << k << "  N = " << format_number(s.state.phonon_number(k), 10)
         << "  |<b>|^2 = " << format_number(s.state.coherent_number(k), 10) << '\n';
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plan and analyse phonon-based measurements of oscillating gravitational fields"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--config", o.config, "Run configuration file");
  app.add_option("--out", o.out, "Write output to this file instead of stdout");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "txt"}));

  auto* plan = app.add_subcommand("plan", "Plan one experiment from --config");
  auto* sw = app.add_subcommand("sweep", "Sweep one parameter of the planned experiment");
  auto* tables = app.add_subcommand("tables", "Reproduce the reference parameter tables");
  tables->add_option("--amplitudes", o.amplitudes, "table (default) or geometry");
  auto* damping = app.add_subcommand("damping", "Damping rates of the first modes");
  damping->add_option("--modes", o.modes, "Number of modes")->check(CLI::Range(1, 1000));
  auto* simulate = app.add_subcommand("simulate", "Integrate the driven mode equations");
  auto* state = app.add_subcommand("state", "Run a Gaussian-state script");
  state->add_option("script", o.script, "Script file")->required();
  for (auto* sub : {plan, sw, tables, damping, simulate, state}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::ostringstream buf;
  int code = kOk;
  try {
    if (*plan) code = run_plan(o, buf);
    else if (*sw) code = run_sweep(o, buf);
    else if (*tables) code = run_tables(o, buf);
    else if (*damping) code = run_damping(o, buf);
    else if (*simulate) code = run_simulate(o, buf);
    else if (*state) code = run_state(o, buf);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  }

  if (o.out.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << o.out << "'\n";
      return kUsage;
    }
    out << buf.str();
  }
  return code;
}
