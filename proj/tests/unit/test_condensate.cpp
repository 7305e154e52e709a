#include <array>
#include <cmath>
#include <numbers>

#include "doctest.h"

#include "becgrav/constants.hpp"
#include "becgrav/errors.hpp"
#include "becgrav/condensate.hpp"
#include "oracles.hpp"

using namespace becgrav;
using constants::kBoltzmann;
using constants::kHbar;

namespace {

CondensateSpec yb_box(double length) {
  CondensateSpec s = oracle::rb_box(length);
  s.species = ytterbium168();
  return s;
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

TEST_CASE("species lookup") {
  CHECK(builtin_species("Rb87")->mass == rubidium87().mass);
  CHECK(builtin_species("rb-87")->interaction == rubidium87().interaction);
  CHECK(builtin_species("168Yb")->name == "Yb168");
  CHECK_FALSE(builtin_species("Cs133").has_value());
  CHECK(rubidium87().three_body_loss == doctest::Approx(1.8e-41));
}

TEST_CASE("derived parameters") {
  const CondensateSpec rb = oracle::rb_box(200e-6);
  const CondensateParams p = derive_params(rb);
  CHECK(rb.length / p.healing_length == doctest::Approx(230).epsilon(0.1));
  CHECK(200e-6 / derive_params(yb_box(200e-6)).healing_length == doctest::Approx(370).epsilon(0.1));

  // Two routes to mu.
  const double mu_direct = kHbar * kHbar * rb.species.interaction * rb.density / (2.0 * rb.species.mass);
  CHECK(p.chemical_potential == doctest::Approx(mu_direct).epsilon(1e-12));
  CHECK(p.healing_length * p.sound_speed ==
        doctest::Approx(kHbar / (std::numbers::sqrt2 * rb.species.mass)).epsilon(1e-14));

  CondensateSpec dense = rb;
  dense.density *= 2.0;
  const CondensateParams q = derive_params(dense);
  CHECK(p.healing_length / q.healing_length == doctest::Approx(std::numbers::sqrt2).epsilon(1e-14));
  CHECK(q.sound_speed / p.sound_speed == doctest::Approx(std::numbers::sqrt2).epsilon(1e-14));

  CHECK(p.depletion_fraction > 1e-5);
  CHECK(p.depletion_fraction < 1e-3);
}

TEST_CASE("mode spectrum") {
  const CondensateSpec rb = oracle::rb_box(200e-6);
  const CondensateParams p = derive_params(rb);
  CHECK(mode_frequency(p, rb.length, 1) / kTwoPi == doctest::Approx(1.5).epsilon(0.1));
  CHECK(mode_frequency(derive_params(yb_box(200e-6)), 200e-6, 1) / kTwoPi ==
        doctest::Approx(1.2).epsilon(0.1));
  CHECK(mode_frequency(p, rb.length, 3) == doctest::Approx(3.0 * mode_frequency(p, rb.length, 1)).epsilon(1e-15));
  const double step = mode_frequency(p, rb.length, 2) - mode_frequency(p, rb.length, 1);
  for (int n = 2; n < 8; ++n) {
    CHECK(mode_frequency(p, rb.length, n + 1) - mode_frequency(p, rb.length, n) ==
          doctest::Approx(step).epsilon(1e-12));
  }
  CHECK_THROWS_AS(mode_frequency(p, rb.length, 0), DomainError);
}

TEST_CASE("length for a target frequency") {
  CHECK(length_for_frequency(rubidium87(), 1e19, kTwoPi * 1.5) == doctest::Approx(200e-6).epsilon(0.1));
  CHECK(length_for_frequency(ytterbium168(), 1e19, kTwoPi * 1.2) == doctest::Approx(200e-6).epsilon(0.1));
  for (double w : {0.3, 9.0, 120.0}) {
    const double L = length_for_frequency(rubidium87(), 1e19, w);
    const CondensateParams p = derive_params(oracle::rb_box(L));
    CHECK(mode_frequency(p, L, 1) == doctest::Approx(w).epsilon(1e-12));
  }
  CHECK_THROWS_AS(length_for_frequency(rubidium87(), 1e19, 0.0), DomainError);
}

TEST_CASE("thermal occupation") {
  const CondensateParams p200 = derive_params(oracle::rb_box(200e-6));
  CHECK(thermal_occupation(mode_frequency(p200, 200e-6, 1), 1e-9) == doctest::Approx(14).epsilon(0.1));
  const CondensateParams p500 = derive_params(oracle::rb_box(500e-6));
  CHECK(thermal_occupation(mode_frequency(p500, 500e-6, 1), 1e-9) == doctest::Approx(35).epsilon(0.1));
  CHECK(thermal_occupation(1.0, 0.0) == 0.0);
  CHECK(thermal_occupation(2.0, 1e-9) == doctest::Approx(kBoltzmann * 1e-9 / (2.0 * kHbar)));
}

TEST_CASE("geometry") {
  CondensateSpec rb = oracle::rb_box(200e-6, 9e5);
  const CondensateGeometry g = geometry(rb);
  CHECK(g.aspect_ratio == doctest::Approx(0.12).epsilon(0.1));
  CHECK(g.cross_section * rb.length * rb.density == doctest::Approx(9e5).epsilon(1e-14));
  rb.atom_number = 3.6e6;
  CHECK(geometry(rb).aspect_ratio == doctest::Approx(2.0 * g.aspect_ratio).epsilon(1e-14));
  CHECK(aspect_ratio(1e8, 1e19, 200e-6) == doctest::Approx(1.4).epsilon(0.1));

  CondensateSpec by_area = oracle::rb_box(200e-6);
  by_area.atom_number.reset();
  by_area.cross_section = g.cross_section;
  CHECK(by_area.resolved_atom_number() == doctest::Approx(9e5).epsilon(1e-14));

  CondensateSpec none = oracle::rb_box(200e-6);
  none.atom_number.reset();
  CHECK_THROWS_AS(geometry(none), ConfigError);

  CondensateSpec clash = oracle::rb_box(200e-6, 1e6);
  clash.cross_section = 1e-12;
  CHECK_THROWS_AS(derive_params(clash), DomainError);
}

TEST_CASE("validity diagnostics") {
  const CondensateSpec rb = oracle::rb_box(200e-6);
  const CondensateParams p = derive_params(rb);
  const std::array<int, 3> modes{1, 2, 3};
  const auto report = validity_report(rb, p, modes);
  REQUIRE(report.size() >= 5);
  CHECK(report[0].ratio == doctest::Approx(0.014).epsilon(0.1));
  for (int i = 0; i < 3; ++i) CHECK(report[i].verdict == Verdict::kPass);

  CondensateSpec hot = rb;
  hot.temperature = 100e-9;
  const auto hot_report = validity_report(hot, derive_params(hot), modes);
  bool found = false;
  for (const Diagnostic& d : hot_report) {
    if (d.criterion == "kB T / mu") {
      found = true;
      CHECK(d.ratio > 1.0);
      CHECK(d.verdict == Verdict::kFail);
    }
  }
  CHECK(found);

  // k_n zeta = 1 at n = L / (pi zeta).
  const int n_edge = static_cast<int>(std::ceil(rb.length / (std::numbers::pi * p.healing_length)));
  const std::array<int, 1> edge{n_edge};
  CHECK(validity_report(rb, p, edge)[0].verdict == Verdict::kFail);

  CHECK(classify_ratio(0.05) == Verdict::kPass);
  CHECK(classify_ratio(0.3) == Verdict::kWarn);
  CHECK(classify_ratio(0.6) == Verdict::kFail);
  CHECK(classify_ratio(NAN) == Verdict::kFail);
}
