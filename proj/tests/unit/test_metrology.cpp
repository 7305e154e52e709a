#include <cmath>
#include <numbers>

#include "doctest.h"

#include "becgrav/errors.hpp"
#include "becgrav/metrology.hpp"
#include "becgrav/planner.hpp"
#include "becgrav/quantum_channels.hpp"
#include "becgrav/reference_tables.hpp"
#include "oracles.hpp"

using namespace becgrav;

namespace {

const ReferenceRow& find_row(int table, Target target, const char* species, double mass) {
  for (const ReferenceRow& r : reference_rows()) {
    if (r.table == table && r.target == target && r.species == species &&
        std::abs(r.source_mass - mass) < 1e-12) {
      return r;
    }
  }
  FAIL("missing reference row");
  return reference_rows().front();
}

// Bound for the drive amplitude that sets r, with ~1000 squeezed phonons.
double squeezing_bound(const ReferenceRow& row) {
  const ExperimentPlan p = make_plan(reference_request(row, AmplitudeSource::kGeometry));
  const double eps = row.target == Target::kAcceleration ? p.drive.accel_osc : p.drive.gradient_osc;
  const double m = pair_amplitude_closed(p.condensate, p.params, p.drive, p.n, p.l);
  return qcrb(qfi_two_mode(1000.0, m, p.interaction_time, eps), p.sensitivity.repetitions);
}

}  // namespace

TEST_CASE("direct readout SNR") {
  const NoiseModel noise;
  const SensitivityReport r = snr_direct(0.7, 14.0, noise, 9e5, 1e4);
  CHECK(r.snr == doctest::Approx(10.0).epsilon(0.3));
  CHECK(r.thermal > r.detection);
  CHECK(r.thermal > r.atoms);
  CHECK(snr_direct(0.7, 14.0, noise, 9e5, 4e4).snr == doctest::Approx(2.0 * r.snr).epsilon(1e-12));
  CHECK(std::sqrt(r.repetitions / r.variance_sum()) == doctest::Approx(r.snr));
  CHECK_THROWS_AS(snr_direct(0.0, 14.0, noise, 9e5, 1e4), DomainError);
}

TEST_CASE("seeded readout SNR") {
  const NoiseModel noise;
  // Printed table-2 inputs: "of the order of 10".
  const SensitivityReport r = snr_parametric(0.4, 4.0, noise, 5e4, 5.0, 1e4);
  CHECK(std::abs(std::log10(r.snr / 10.0)) < 0.5);
  NoiseModel quiet = noise;
  quiet.atom_rel = 0.0;
  quiet.initial_coherent_rel = 0.0;
  const SensitivityReport bare = snr_parametric(0.4, 4.0, quiet, 5e4, 5.0, 1e4);
  CHECK(bare.snr == doctest::Approx(std::sqrt(1e4 / ((16.0 + 1.0) / (4.0 * 0.16)))).epsilon(1e-12));
  CHECK(snr_parametric(0.4, 4.0, noise, 5e4, 5.0, 1e4).snr <= snr_direct(0.4, 4.0, noise, 5e4, 1e4).snr);
  CHECK_THROWS_AS(snr_parametric(0.4, 4.0, noise, 5e4, 0.0, 1e4), DomainError);
}

TEST_CASE("required signal inverts the SNR") {
  const NoiseModel noise;
  for (bool parametric : {false, true}) {
    const double n_cr = required_signal(10.0, 14.0, noise, 1e4, parametric);
    const double snr = parametric ? snr_parametric(n_cr, 14.0, noise, 1e6, 100.0, 1e4).snr
                                  : snr_direct(n_cr, 14.0, noise, 1e6, 1e4).snr;
    CHECK(snr == doctest::Approx(10.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(required_signal(1e4, 14.0, noise, 1e4, true), InfeasibleError);
}

TEST_CASE("atom and phonon requirements") {
  const AtomSpecies rb = rubidium87();
  const double w1 = 2.0 * std::numbers::pi * 1.5;
  const double na = required_atoms_direct(0.7, 1, w1, 2e-8, 10.0, rb);
  CHECK(na / 9e5 <= 2.0);
  CHECK(na / 9e5 >= 0.5);
  CHECK(required_atoms_direct(0.7, 1, w1, 1e-8, 10.0, rb) == doctest::Approx(4.0 * na).epsilon(1e-14));
  CHECK_THROWS_AS(required_atoms_direct(0.7, 1, w1, 0.0, 10.0, rb), InfeasibleError);

  CHECK(required_initial_phonons(0.4, 0.02, SqueezeChannel::kTwoMode) == doctest::Approx(1000.0));
  CHECK(required_initial_phonons(1.6, 0.02, SqueezeChannel::kTwoMode) ==
        doctest::Approx(4.0 * required_initial_phonons(0.4, 0.02, SqueezeChannel::kTwoMode)));
  CHECK(required_initial_phonons(0.4, 0.02, SqueezeChannel::kSingleMode) == doctest::Approx(10.0));
  CHECK_THROWS_AS(required_initial_phonons(0.4, 0.0, SqueezeChannel::kModeMix), InfeasibleError);

  const CondensateSpec spec = oracle::rb_box(200e-6);
  const CondensateParams params = derive_params(spec);
  const double n_min = min_atoms_for_state(5.0, 2, spec, params);
  CHECK(n_min / 5e4 <= 2.0);
  CHECK(n_min / 5e4 >= 0.5);
}

TEST_CASE("quantum Fisher information") {
  CHECK(qfi_mode_mix(0.0, 1e-34, 10.0, 1e-8) == 0.0);
  CHECK(qfi_two_mode(0.0, 1e-34, 10.0, 1e-8) > 0.0);
  CHECK_THROWS_AS(qcrb(0.0, 1e4), DomainError);
  double previous = 1e300;
  for (double ns : {0.0, 10.0, 100.0, 1000.0}) {
    const double b = qcrb(qfi_two_mode(ns, 1e-35, 10.0, 2e-8), 1e4);
    CHECK(b < previous);
    previous = b;
  }
  const double i = qfi_two_mode(10.0, 1e-35, 10.0, 2e-8);
  CHECK(qcrb(i, 4e4) == doctest::Approx(qcrb(i, 1e4) / 2.0).epsilon(1e-14));
  CHECK(qcrb(qfi_two_mode(10.0, 1e-35, 20.0, 2e-8), 1e4) < qcrb(i, 1e4));

  const double accel = squeezing_bound(find_row(2, Target::kAcceleration, "Rb87", 0.2));
  CHECK(std::abs(std::log10(accel / 1e-13)) <= 1.0);
  const double grad = squeezing_bound(find_row(2, Target::kGradient, "Rb87", 0.2));
  CHECK(std::abs(std::log10(grad / 1e-10)) <= 1.0);
}

TEST_CASE("seismic floor") {
  const double a = seismic_floor(1e-7, 2.0 * std::numbers::pi, 10.0, 1e4);
  CHECK(a >= 1e-8 / 3.0);
  CHECK(a <= 3e-8);
  CHECK(a == doctest::Approx(std::pow(2.0 * std::numbers::pi, 2) * 1e-7 / std::sqrt(1e5)).epsilon(1e-14));
  CHECK_THROWS_AS(seismic_floor(0.0, 1.0, 1.0, 1.0), DomainError);
}
