#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "becgrav/constants.hpp"
#include "becgrav/gaussian_state.hpp"
#include "becgrav/mode_dynamics.hpp"
#include "becgrav/quantum_channels.hpp"
#include "becgrav/state_script.hpp"

namespace oracle {

using namespace becgrav;
using constants::kHbar;
using constants::kPi;

CondensateSpec rb_box(double length, double atom_number) {
  CondensateSpec s;
  s.species = rubidium87();
  s.length = length;
  s.density = 1e19;
  s.temperature = 1e-9;
  s.atom_number = atom_number;
  return s;
}

double max_rel_deviation(const std::vector<double>& a, const std::vector<double>& b) {
  double diff = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    diff = std::max(diff, std::abs(a[i] - b[i]));
    scale = std::max(scale, std::abs(b[i]));
  }
  return scale > 0.0 ? diff / scale : diff;
}

double sine_fit_amplitude(const std::vector<double>& samples) {
  const std::size_t n = samples.size();
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd y(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double th = 2.0 * kPi * double(k) / double(n);
    design(k, 0) = 1.0;
    design(k, 1) = std::sin(th);
    design(k, 2) = std::cos(th);
    y(k) = samples[k];
  }
  const Eigen::Vector3d c = design.colPivHouseholderQr().solve(y);
  return std::hypot(c(1), c(2));
}

SourceFit fit_source_amplitudes(const SourceSphere& sphere, double r0, int samples) {
  const double h = 1e-5;
  const double period = 2.0 * kPi / sphere.omega;
  std::vector<double> accel, grad;
  for (int k = 0; k < samples; ++k) {
    const double t = period * k / samples;
    const double pm = exact_axial_potential(-h, t, sphere, r0);
    const double p0 = exact_axial_potential(0.0, t, sphere, r0);
    const double pp = exact_axial_potential(h, t, sphere, r0);
    accel.push_back(-(pp - pm) / (2.0 * h));
    grad.push_back(-(pp - 2.0 * p0 + pm) / (h * h));
  }
  return {sine_fit_amplitude(accel), sine_fit_amplitude(grad)};
}

namespace {

struct Comparison {
  std::vector<double> numeric;
  std::vector<double> closed;
};

template <class Closed>
Comparison run(const CoupledModeProblem& p, const std::vector<double>& y0, double t_end,
               std::size_t slot, Closed&& closed) {
  const double step = max_integration_step(p) / 4.0;
  const ModeTrajectory tr = integrate_coupled_modes(p, y0, 0.0, t_end, step, 1);
  Comparison c;
  for (std::size_t k = 0; k < tr.time.size(); ++k) {
    c.numeric.push_back(tr.state[k][2 * slot]);
    c.closed.push_back(closed(tr.time[k]));
  }
  return c;
}

CoupledModeProblem base_problem(std::vector<int> modes, const FieldAmplitudes& ampl,
                                double drive_omega, double phi) {
  CoupledModeProblem p;
  p.modes = std::move(modes);
  p.spec = rb_box(200e-6);
  p.params = derive_params(p.spec);
  p.amplitudes = ampl;
  p.drive_omega = drive_omega;
  p.drive_phase = phi;
  p.damping = {0.0};
  p.direct = false;
  p.parametric = false;
  p.coupling = false;
  return p;
}

double omega_of(const CoupledModeProblem& p, int n) {
  return mode_frequency(p.params, p.spec.length, n);
}

double direct_case(double detuning, double gamma) {
  const FieldAmplitudes ampl{0.0, 2e-8, 2e-6};
  CoupledModeProblem p = base_problem({1}, ampl, 0.0, 0.3);
  const double w = omega_of(p, 1);
  p.drive_omega = w * detuning;
  p.direct = true;
  p.damping = {gamma};
  const double f = direct_drive_amplitude(ampl, p.spec, 1, p.drive_omega);
  const double pt = shifted_phase(p.drive_phase);
  const double t_end = 5.0 * 2.0 * kPi / p.drive_omega;
  if (gamma > 0.0) {
    const Oscillation s0 = steady_state_motion(f, gamma, w, pt, 0.0);
    const Comparison c = run(p, {s0.g, s0.gdot}, t_end, 0, [&](double t) {
      return steady_state_motion(f, gamma, w, pt, t).g;
    });
    return max_rel_deviation(c.numeric, c.closed);
  }
  const Comparison c = run(p, {0.0, 0.0}, t_end, 0, [&](double t) {
    return transient_response(f, w, p.drive_omega, pt, t).g;
  });
  return max_rel_deviation(c.numeric, c.closed);
}

}  // namespace

double undamped_resonant_deviation() { return direct_case(1.0, 0.0); }
double off_resonant_deviation() { return direct_case(1.37, 0.0); }
double steady_state_deviation() { return direct_case(1.0, 0.3); }

double parametric_deviation() {
  const CondensateSpec spec = rb_box(200e-6);
  const double sbar = 1e-4;
  const double unit = parametric_amplitude({0.0, 0.0, 1.0}, spec, 1);
  CoupledModeProblem p = base_problem({1}, {0.0, 0.0, sbar / unit}, 0.0, 0.7);
  p.parametric = true;
  const double w = omega_of(p, 1);
  p.drive_omega = 2.0 * w;
  const double g0 = 1e-3;
  const double ph = p.drive_phase / 2.0;
  const std::vector<double> y0{g0 * std::cos(ph),
                               -g0 * w * std::sin(ph) + g0 * sbar * w / 4.0 * std::cos(ph)};
  const double t_end = 5.0 * 2.0 * kPi / p.drive_omega;
  const Comparison c = run(p, y0, t_end, 0, [&](double t) {
    return parametric_growth(g0, sbar, w, t) * std::cos(w * t + ph);
  });
  return max_rel_deviation(c.numeric, c.closed);
}

double coupling_deviation() {
  const FieldAmplitudes ampl{0.0, 2e-9, 0.0};
  CoupledModeProblem p = base_problem({2, 1}, ampl, 0.0, 0.4);
  p.coupling = true;
  const double wn = omega_of(p, 2);
  const double wl = omega_of(p, 1);
  p.drive_omega = wn + wl;
  const double gl = 1e-3, phl = 0.9;
  const double G = coupling_drive(ampl, p.spec, p.params, 2, 1, gl);
  const double phase = coupling_phase(CouplingResonance::kSum, p.drive_phase, phl);
  const double t_end = 5.0 * 2.0 * kPi / p.drive_omega;
  const Comparison c =
      run(p, {0.0, 0.0, gl * std::sin(phl), gl * wl * std::cos(phl)}, t_end, 0, [&](double t) {
        return coupling_response(G, wn, t, phase).g +
               transient_response(-G, wn, p.drive_omega + wl,
                                  p.drive_phase + phl + kPi / 2.0, t)
                   .g;
      });
  return max_rel_deviation(c.numeric, c.closed);
}

AmplitudeCheck closed_vs_exact_amplitudes(int max_mode) {
  const CondensateSpec spec = rb_box(200e-6);
  const CondensateParams params = derive_params(spec);
  const FieldAmplitudes ampl{3e-9, 2e-8, 2e-6};
  AmplitudeCheck out;
  auto consider = [&](double closed, double exact, int n, int l, const char* what) {
    const double kz = mode_wavenumber(spec.length, std::max(n, l)) * params.healing_length;
    const double scaled = std::abs(closed - exact) / std::abs(exact) / kz;
    if (scaled > out.worst_scaled) {
      out.worst_scaled = scaled;
      std::ostringstream label;
      label << what << " n=" << n << " l=" << l;
      out.worst_label = label.str();
    }
  };
  for (int n = 1; n <= max_mode; ++n) {
    for (int l = 1; l <= max_mode; ++l) {
      const TransitionAmplitudes ex = amplitudes_exact(spec, params, ampl, n, l);
      if (l == 1) {
        consider(displacement_amplitude_closed(spec, params, ampl, n), ex.displacement, n, n,
                 "M_0n");
        consider(squeeze_amplitude_closed(spec, params, ampl, n), ex.squeeze, n, n, "M_nn");
      }
      if (l != n) consider(pair_amplitude_closed(spec, params, ampl, n, l), ex.pair, n, l, "M_ln");
    }
  }
  return out;
}

double EngineSweep::worst() const { return std::max({displaced_squeezed, two_mode, mixing}); }

namespace {

double rel(double engine, double closed) {
  return closed == 0.0 ? std::abs(engine) : std::abs(engine - closed) / std::abs(closed);
}

// exp(K) for a real antisymmetric 3x3 generator.
Eigen::Matrix3d rodrigues(const Eigen::Matrix3d& k, double theta) {
  if (theta == 0.0) return Eigen::Matrix3d::Identity();
  return Eigen::Matrix3d::Identity() + std::sin(theta) / theta * k +
         (1.0 - std::cos(theta)) / (theta * theta) * k * k;
}

}  // namespace

EngineSweep engine_sweep(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw_alpha = [&] {
    const double rad = 3.0 * std::sqrt(unit(rng));
    return std::polar(rad, 2.0 * kPi * unit(rng));
  };
  EngineSweep out;
  out.cases = cases;
  for (int i = 0; i < cases; ++i) {
    const std::complex<double> alpha = draw_alpha();
    const double r0 = 1.5 * unit(rng);
    const double theta0 = 2.0 * kPi * unit(rng);
    const double r = 1.5 * unit(rng);
    {
      GaussianState s = GaussianState::vacuum(1);
      s.squeeze(0, r0, theta0);
      s.displace(0, alpha);
      s.squeeze(0, r, 0.0);
      out.displaced_squeezed =
          std::max({out.displaced_squeezed,
                    rel(s.phonon_number(0), displaced_squeezed_number(alpha, r0, theta0, r)),
                    rel(s.coherent_number(0), displaced_squeezed_coherent(alpha, r))});
    }
    {
      const double nth = 2.0 * unit(rng);
      const double angle = 2.0 * kPi * unit(rng);
      GaussianState s = GaussianState::thermal({nth, 0.0});
      s.displace(0, alpha);
      s.two_mode_squeeze(0, 1, r, angle);
      const double n0 = nth + std::norm(alpha);
      const TwoModeNumbers ref = two_mode_numbers(n0, r, std::norm(alpha));
      out.two_mode = std::max({out.two_mode, rel(s.phonon_number(0), ref.mode),
                               rel(s.phonon_number(1), ref.partner),
                               rel(s.coherent_number(1), ref.partner_coherent)});
    }
    {
      const double nth = 2.0 * unit(rng);
      const double tm = unit(rng);
      const double tp = unit(rng);
      GaussianState s = GaussianState::thermal({0.0, nth, 0.0});
      s.displace(1, alpha);
      Eigen::Matrix3d k = Eigen::Matrix3d::Zero();
      k(1, 0) = tm;
      k(0, 1) = -tm;
      k(1, 2) = tp;
      k(2, 1) = -tp;
      const Eigen::MatrixXcd mu = rodrigues(k, std::hypot(tm, tp)).cast<std::complex<double>>();
      s.apply_bogoliubov({0, 1, 2}, mu, Eigen::MatrixXcd::Zero(3, 3));
      const double n0 = nth + std::norm(alpha);
      GaussianState b = GaussianState::thermal({nth, 0.0});
      b.displace(0, alpha);
      b.beamsplitter(0, 1, tm);
      out.mixing = std::max({out.mixing, rel(s.phonon_number(1), mode_mix_number(n0, tm, tp)),
                             rel(b.phonon_number(0), mode_mix_number(n0, tm, 0.0))});
    }
  }
  return out;
}

double direct_phonons_identity() {
  const CondensateSpec spec = rb_box(200e-6, 8e5);
  const CondensateParams params = derive_params(spec);
  const FieldAmplitudes ampl{0.0, 2e-8, 2e-6};
  const double t = 10.0;
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const double w = mode_frequency(params, spec.length, n);
    const double f = direct_drive_amplitude(ampl, spec, n, w);
    const double composed = phonons_from_amplitude(resonant_envelope(f, w, t), n, spec, params);
    worst = std::max(worst, rel(composed, created_phonons_direct(ampl, spec, params, n, t)));
  }
  return worst;
}

double coupling_phonons_identity() {
  const CondensateSpec spec = rb_box(500e-6, 1e7);
  const CondensateParams params = derive_params(spec);
  const FieldAmplitudes ampl{0.0, 2e-8, 2e-6};
  const double t = 10.0, n0 = 1000.0;
  double worst = 0.0;
  for (auto [n, l] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}, {1, 2}}) {
    const double r = 2.0 * std::abs(pair_amplitude_closed(spec, params, ampl, n, l)) * t / kHbar;
    worst = std::max(worst, rel(created_phonons_coupling(ampl, spec, params, n, l, n0, t),
                                n0 * r * r));
  }
  return worst;
}

ScriptInvariants random_script_invariants(std::uint64_t seed, int scripts, int length) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> slot(0, 3);
  std::uniform_int_distribution<int> verb(0, 4);
  ScriptInvariants out;
  for (int s = 0; s < scripts; ++s) {
    std::ostringstream text;
    text << "thermal 0 " << 2.0 * unit(rng) << "\nthermal 3 " << unit(rng) << "\n";
    for (int c = 0; c < length; ++c) {
      const int a = slot(rng);
      int b = slot(rng);
      if (b == a) b = (a + 1) % 4;
      switch (verb(rng)) {
        case 0: text << "displace " << a << ' ' << 3.0 * unit(rng) - 1.5 << ' '
                     << 3.0 * unit(rng) - 1.5 << '\n'; break;
        case 1: text << "squeeze " << a << ' ' << unit(rng) << ' ' << 6.0 * unit(rng) << '\n';
          break;
        case 2: text << "two_mode " << a << ' ' << b << ' ' << unit(rng) << ' '
                     << 6.0 * unit(rng) << '\n'; break;
        case 3: text << "beamsplitter " << a << ' ' << b << ' ' << 6.0 * unit(rng) - 3.0 << '\n';
          break;
        default: text << "rotate " << a << ' ' << 6.0 * unit(rng) << '\n'; break;
      }
    }
    std::istringstream in("modes 4\n" + text.str());
    const std::vector<StateCommand> all = parse_state_script(in);
    std::ostringstream sink;
    double before_pair = 0.0;
    for (std::size_t k = 1; k <= all.size(); ++k) {
      const std::vector<StateCommand> prefix(all.begin(), all.begin() + long(k));
      const GaussianState st = run_state_script(prefix, sink).state;
      ++out.commands;
      out.max_symmetry_defect = std::max(out.max_symmetry_defect, st.symmetry_defect());
      out.min_symplectic_eigenvalue =
          std::min(out.min_symplectic_eigenvalue, st.min_symplectic_eigenvalue());
      const StateCommand& cmd = all[k - 1];
      if (cmd.verb == "beamsplitter") {
        const int a = int(cmd.args[0]), b = int(cmd.args[1]);
        const double after = st.phonon_number(a) + st.phonon_number(b);
        out.max_beamsplitter_drift =
            std::max(out.max_beamsplitter_drift, before_pair > 0.0 ? std::abs(after - before_pair) / before_pair
                                           : std::abs(after));
      }
      if (k < all.size() && all[k].verb == "beamsplitter") {
        const int a = int(all[k].args[0]), b = int(all[k].args[1]);
        before_pair = st.phonon_number(a) + st.phonon_number(b);
      }
    }
    ++out.scripts;
  }
  return out;
}

}  // namespace oracle
