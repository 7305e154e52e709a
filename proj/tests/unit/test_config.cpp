#include <filesystem>
#include <sstream>

#include "doctest.h"

#include "becgrav/config.hpp"
#include "becgrav/errors.hpp"

using namespace becgrav;

namespace {

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in, "test.ini");
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("unit scales") {
  CHECK(unit_scale(Dimension::kMass, "g") == 1e-3);
  CHECK(unit_scale(Dimension::kLength, "um") == 1e-6);
  CHECK(unit_scale(Dimension::kLength, "µm") == 1e-6);
  CHECK(unit_scale(Dimension::kNumberDensity, "cm^-3") == 1e6);
  CHECK(*unit_scale(Dimension::kFrequency, "Hz") == doctest::Approx(6.283185307179586));
  CHECK(unit_scale(Dimension::kLossConstant, "cm^6/s") == 1e-12);
  CHECK_FALSE(unit_scale(Dimension::kLength, "g").has_value());
  CHECK_FALSE(unit_scale(Dimension::kCount, "m").has_value());
}

TEST_CASE("parse a full config") {
  const RunConfig c = parse(
      "[source]\nmass = 200 g\nr_min = 1 mm\nstroke = 2 mm  # comment\n"
      "[condensate]\nspecies = Yb168\nlength = 300 um\ndensity = 1e13 cm^-3\ntemperature = 2 nK\n"
      "[plan]\nscheme = two_mode_squeeze\ntarget = gradient\namplitudes = table\nrepetitions = 100\n"
      "[noise]\natom_rel = 0.05\n");
  CHECK(c.has_source);
  CHECK(c.has_species);
  CHECK(c.request.source.mass == doctest::Approx(0.2));
  CHECK(c.request.source.stroke == doctest::Approx(2e-3));
  CHECK(c.request.species.name == "Yb168");
  CHECK(*c.request.constraints.length == doctest::Approx(300e-6));
  CHECK(c.request.constraints.density == doctest::Approx(1e19));
  CHECK(c.request.constraints.temperature == doctest::Approx(2e-9));
  CHECK(c.request.scheme == Scheme::kTwoModeSqueeze);
  CHECK(c.request.target == Target::kGradient);
  CHECK(c.request.constraints.amplitudes == AmplitudeSource::kTableConvention);
  CHECK(c.request.constraints.repetitions == 100.0);
  CHECK(c.request.constraints.noise.atom_rel == 0.05);
  CHECK(condensate_from(c).length == doctest::Approx(300e-6));
}

TEST_CASE("rejections") {
  CHECK(error_of("[source]\nmass = 200\n").find("unit required") != std::string::npos);
  CHECK(error_of("[source]\nmass = 200 m\n").find("not a mass unit") != std::string::npos);
  CHECK(error_of("[source]\nmas = 200 g\n").find("unknown key") != std::string::npos);
  CHECK(error_of("[sauce]\n").find("unknown section") != std::string::npos);
  CHECK(error_of("[source]\nmass = 1 g\nmass = 2 g\n").find("duplicate key") != std::string::npos);
  CHECK(error_of("mass = 1 g\n").find("outside any section") != std::string::npos);
  CHECK(error_of("[plan]\nrepetitions = 10 s\n").find("dimensionless") != std::string::npos);
  CHECK(error_of("[condensate]\nspecies = Cs133\n").find("unknown species") != std::string::npos);
  CHECK(error_of("[sweep]\nparameter = omega\nfrom = 1\nto = 2\npoints = 3\n").find("M, R_min") !=
        std::string::npos);
  CHECK(error_of("[sweep]\nparameter = M\nfrom = 1 g\n").find("needs parameter") != std::string::npos);
  CHECK(error_of("[simulate]\nmodes = 1 2\ninitial_g = 0.1\n").find("one value per mode") !=
        std::string::npos);
  CHECK(error_of("[source]\nmass = 1 g\n[").find("test.ini:3") != std::string::npos);
  CHECK_THROWS_AS(load_config("/nonexistent/file.ini"), ConfigError);
  CHECK_THROWS_AS(condensate_from(parse("[source]\nmass = 1 g\n")), ConfigError);
}

TEST_CASE("shipped configs load") {
  int loaded = 0;
  for (const auto& entry : std::filesystem::directory_iterator(BECGRAV_CONFIG_DIR)) {
    if (entry.path().extension() != ".ini") continue;
    INFO(entry.path().string());
    RunConfig c;
    CHECK_NOTHROW(c = load_config(entry.path().string()));
    CHECK(c.has_species);
    ++loaded;
  }
  CHECK(loaded >= 4);

  const RunConfig sweep = load_config(std::string(BECGRAV_CONFIG_DIR) + "/sweep_mass.ini");
  REQUIRE(sweep.sweep.has_value());
  CHECK(sweep.sweep->points == 7);
  CHECK(sweep.sweep->log);
  CHECK(sweep.sweep->from == doctest::Approx(2e-4));

  const RunConfig na = load_config(std::string(BECGRAV_CONFIG_DIR) + "/custom_species.ini");
  CHECK(na.request.species.name == "Na23");
  CHECK(na.request.species.three_body_loss == doctest::Approx(1.6e-42));
}
