#include <complex>
#include <vector>

#include <benchmark/benchmark.h>

#include "becgrav/damping.hpp"
#include "becgrav/gaussian_state.hpp"
#include "becgrav/mode_dynamics.hpp"
#include "becgrav/reference_tables.hpp"

using namespace becgrav;

namespace {

CondensateSpec box() {
  CondensateSpec s;
  s.species = *builtin_species("Rb87");
  s.length = 200e-6;
  s.density = 1e19;
  s.temperature = 1e-9;
  s.atom_number = 1e6;
  return s;
}

void BM_LandauQuadrature(benchmark::State& state) {
  const CondensateSpec spec = box();
  const CondensateParams params = derive_params(spec);
  const double w = mode_frequency(params, spec.length, 1);
  for (auto _ : state) benchmark::DoNotOptimize(landau_rate(params, spec, w, spec.temperature));
}
BENCHMARK(BM_LandauQuadrature);

void BM_GaussianChannels(benchmark::State& state) {
  const int modes = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GaussianState g = GaussianState::vacuum(modes);
    for (int k = 0; k + 1 < modes; ++k) {
      g.displace(k, {0.5, -0.2});
      g.squeeze(k, 0.3, 0.1);
      g.two_mode_squeeze(k, k + 1, 0.2);
      g.beamsplitter(k, k + 1, 0.4);
    }
    benchmark::DoNotOptimize(g.total_phonon_number());
  }
}
BENCHMARK(BM_GaussianChannels)->Arg(2)->Arg(8)->Arg(32);

void BM_CoupledModesRK4(benchmark::State& state) {
  CoupledModeProblem p;
  p.modes = {1, 2, 3};
  p.spec = box();
  p.params = derive_params(p.spec);
  p.amplitudes.accel_osc = 2e-8;
  p.amplitudes.gradient_osc = 2e-6;
  p.drive_omega = mode_frequency(p.params, p.spec.length, 1);
  p.damping = {1e-2};
  const std::vector<double> initial(6, 0.0);
  const double step = max_integration_step(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_coupled_modes(p, initial, 0.0, 10.0, step, 1000));
  }
}
BENCHMARK(BM_CoupledModesRK4)->Unit(benchmark::kMillisecond);

void BM_ReproduceTables(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reproduce_tables());
}
BENCHMARK(BM_ReproduceTables)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
