#include "becgrav/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "becgrav/constants.hpp"
#include "becgrav/errors.hpp"

namespace becgrav {

using constants::kPi;

std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::kCount: return "dimensionless";
    case Dimension::kMass: return "mass";
    case Dimension::kLength: return "length";
    case Dimension::kArea: return "area";
    case Dimension::kNumberDensity: return "number density";
    case Dimension::kMassDensity: return "mass density";
    case Dimension::kTemperature: return "temperature";
    case Dimension::kTime: return "time";
    case Dimension::kFrequency: return "frequency";
    case Dimension::kRate: return "rate";
    case Dimension::kAcceleration: return "acceleration";
    case Dimension::kGradient: return "gravity gradient";
    case Dimension::kAngle: return "angle";
    case Dimension::kLossConstant: return "three-body loss constant";
  }
  return "?";
}

namespace {

using UnitTable = std::vector<std::pair<std::string_view, double>>;

const UnitTable& units_of(Dimension d) {
  static const std::map<Dimension, UnitTable> table = {
      {Dimension::kCount, {}},
      {Dimension::kMass, {{"kg", 1.0}, {"g", 1e-3}, {"mg", 1e-6}}},
      {Dimension::kLength, {{"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}}},
      {Dimension::kArea, {{"m^2", 1.0}, {"cm^2", 1e-4}, {"mm^2", 1e-6}, {"um^2", 1e-12}}},
      {Dimension::kNumberDensity, {{"m^-3", 1.0}, {"1/m^3", 1.0}, {"cm^-3", 1e6}, {"1/cm^3", 1e6}}},
      {Dimension::kMassDensity, {{"kg/m^3", 1.0}, {"g/cm^3", 1e3}}},
      {Dimension::kTemperature, {{"K", 1.0}, {"mK", 1e-3}, {"uK", 1e-6}, {"nK", 1e-9}}},
      {Dimension::kTime, {{"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"min", 60.0}, {"h", 3600.0}}},
      {Dimension::kFrequency,
       {{"Hz", 2 * kPi}, {"mHz", 2e-3 * kPi}, {"kHz", 2e3 * kPi}, {"rad/s", 1.0}}},
      {Dimension::kRate, {{"1/s", 1.0}, {"s^-1", 1.0}}},
      {Dimension::kAcceleration, {{"m/s^2", 1.0}, {"m*s^-2", 1.0}}},
      {Dimension::kGradient, {{"1/s^2", 1.0}, {"s^-2", 1.0}}},
      {Dimension::kAngle, {{"rad", 1.0}, {"deg", kPi / 180.0}}},
      {Dimension::kLossConstant, {{"m^6/s", 1.0}, {"cm^6/s", 1e-12}}},
  };
  return table.at(d);
}

std::string unit_list(Dimension d) {
  std::string out;
  for (const auto& [u, s] : units_of(d)) {
    if (!out.empty()) out += ", ";
    out += u;
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::optional<double> to_number(std::string_view tok) {
  double v = 0.0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::vector<std::string> split(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct Entry {
  std::string section;
  std::string key;
  std::string value;
  int line = 0;
};

class Reader {
 public:
  Reader(std::string origin) : origin_(std::move(origin)) {}

  [[noreturn]] void fail(const Entry& e, const std::string& what) const {
    std::ostringstream msg;
    msg << origin_ << ":" << e.line << ": [" << e.section << "] " << e.key << ": " << what;
    throw ConfigError(msg.str());
  }

  // Numbers followed by an optional unit (required unless dimensionless).
  std::vector<double> quantities(const Entry& e, Dimension d) const {
    auto toks = split(e.value);
    if (toks.empty()) fail(e, "missing value");
    std::optional<std::string> unit;
    if (!to_number(toks.back())) {
      unit = toks.back();
      toks.pop_back();
    }
    if (toks.empty()) fail(e, "missing value");
    double scale = 1.0;
    if (d == Dimension::kCount) {
      if (unit && *unit != "1") fail(e, "dimensionless value takes no unit, got '" + *unit + "'");
    } else {
      if (!unit) {
        fail(e, "unit required for " + std::string(to_string(d)) + " (" + unit_list(d) + ")");
      }
      auto s = unit_scale(d, *unit);
      if (!s) {
        fail(e, "unit '" + *unit + "' is not a " + std::string(to_string(d)) + " unit (" +
                    unit_list(d) + ")");
      }
      scale = *s;
    }
    std::vector<double> out;
    for (const auto& t : toks) {
      auto v = to_number(t);
      if (!v) fail(e, "'" + t + "' is not a number");
      out.push_back(*v * scale);
    }
    return out;
  }

  double quantity(const Entry& e, Dimension d) const {
    auto v = quantities(e, d);
    if (v.size() != 1) fail(e, "expected a single value");
    return v[0];
  }

  int integer(const Entry& e) const {
    const double v = quantity(e, Dimension::kCount);
    if (v != std::floor(v) || std::abs(v) > 1e9) fail(e, "expected an integer");
    return static_cast<int>(v);
  }

  bool boolean(const Entry& e) const {
    const std::string v = trim(e.value);
    if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
    if (v == "false" || v == "no" || v == "off" || v == "0") return false;
    fail(e, "expected true or false, got '" + v + "'");
  }

  std::string word(const Entry& e) const {
    const std::string v = trim(e.value);
    if (v.empty()) fail(e, "missing value");
    return v;
  }

  const std::string& origin() const { return origin_; }

 private:
  std::string origin_;
};

using Handler = std::function<void(const Reader&, const Entry&, RunConfig&)>;

Handler dim(Dimension d, std::function<void(RunConfig&, double)> set) {
  return [d, set](const Reader& r, const Entry& e, RunConfig& c) { set(c, r.quantity(e, d)); };
}

struct Pending {
  std::optional<Entry> from, to, parameter;
  int points = 0;
  bool log = false;
  bool any = false;
  std::optional<std::string> species_name;
  std::optional<Entry> species_ref;
  AtomSpecies custom;
  bool custom_any = false;
};

}  // namespace

std::optional<double> unit_scale(Dimension d, std::string_view unit) {
  for (const auto& [u, s] : units_of(d)) {
    if (u == unit) return s;
  }
  if (unit == "µm" && d == Dimension::kLength) return 1e-6;
  if (unit == "µK" && d == Dimension::kTemperature) return 1e-6;
  return std::nullopt;
}

RunConfig parse_config(std::istream& in, const std::string& origin) {
  Reader reader(origin);
  RunConfig cfg;
  cfg.origin = origin;
  Pending pend;
  PlanConstraints& pc = cfg.request.constraints;
  SimulateConfig& sim = cfg.simulate;

  std::map<std::string, std::map<std::string, Handler>> keys;
  auto& src = keys["source"];
  src["mass"] = dim(Dimension::kMass, [](RunConfig& c, double v) { c.request.source.mass = v; });
  src["density"] =
      dim(Dimension::kMassDensity, [](RunConfig& c, double v) { c.request.source.density = v; });
  src["radius"] = dim(Dimension::kLength,
                      [](RunConfig& c, double v) { c.request.source.radius_override = v; });
  src["r_min"] = dim(Dimension::kLength, [](RunConfig& c, double v) { c.request.source.r_min = v; });
  src["stroke"] =
      dim(Dimension::kLength, [](RunConfig& c, double v) { c.request.source.stroke = v; });
  src["phase"] = dim(Dimension::kAngle, [](RunConfig& c, double v) { c.request.source.phase = v; });

  auto& cond = keys["condensate"];
  cond["species"] = [&](const Reader& r, const Entry& e, RunConfig&) {
    pend.species_name = r.word(e);
    pend.species_ref = e;
  };
  cond["length"] = dim(Dimension::kLength, [](RunConfig& c, double v) { c.request.constraints.length = v; });
  cond["density"] = dim(Dimension::kNumberDensity,
                        [](RunConfig& c, double v) { c.request.constraints.density = v; });
  cond["temperature"] = dim(Dimension::kTemperature,
                            [](RunConfig& c, double v) { c.request.constraints.temperature = v; });
  cond["atom_number"] = dim(Dimension::kCount,
                            [](RunConfig& c, double v) { c.request.constraints.atom_number = v; });

  auto& spc = keys["species"];
  spc["name"] = [&](const Reader& r, const Entry& e, RunConfig&) {
    pend.custom.name = r.word(e);
    pend.custom_any = true;
  };
  spc["mass"] = [&](const Reader& r, const Entry& e, RunConfig&) {
    pend.custom.mass = r.quantity(e, Dimension::kMass);
    pend.custom_any = true;
  };
  spc["interaction"] = [&](const Reader& r, const Entry& e, RunConfig&) {
    pend.custom.interaction = r.quantity(e, Dimension::kLength);
    pend.custom_any = true;
  };
  spc["three_body"] = [&](const Reader& r, const Entry& e, RunConfig&) {
    pend.custom.three_body_loss = r.quantity(e, Dimension::kLossConstant);
    pend.custom_any = true;
  };

  auto& plan = keys["plan"];
  plan["scheme"] = [](const Reader& r, const Entry& e, RunConfig& c) {
    auto s = parse_scheme(r.word(e));
    if (!s) r.fail(e, "unknown scheme (direct, two_mode_squeeze, single_mode_squeeze, mode_mix)");
    c.request.scheme = *s;
  };
  plan["target"] = [](const Reader& r, const Entry& e, RunConfig& c) {
    auto t = parse_target(r.word(e));
    if (!t) r.fail(e, "unknown target (acceleration, gradient)");
    c.request.target = *t;
  };
  plan["amplitudes"] = [](const Reader& r, const Entry& e, RunConfig& c) {
    auto a = parse_amplitude_source(r.word(e));
    if (!a) r.fail(e, "unknown amplitude source (geometry, table, nominal)");
    c.request.constraints.amplitudes = *a;
  };
  plan["interaction_time"] = dim(Dimension::kTime, [&](RunConfig&, double v) { pc.interaction_time = v; });
  plan["repetitions"] = dim(Dimension::kCount, [&](RunConfig&, double v) { pc.repetitions = v; });
  plan["snr"] = dim(Dimension::kCount, [&](RunConfig&, double v) { pc.snr_target = v; });
  plan["min_drive_frequency"] =
      dim(Dimension::kFrequency, [&](RunConfig&, double v) { pc.min_drive_omega = v; });
  plan["loss_rate"] = dim(Dimension::kRate, [&](RunConfig&, double v) { pc.loss_rate = v; });
  plan["max_aspect_ratio"] = dim(Dimension::kCount, [&](RunConfig&, double v) { pc.max_aspect_ratio = v; });
  plan["initial_phonons"] = dim(Dimension::kCount, [&](RunConfig&, double v) { pc.initial_phonons = v; });
  plan["nominal_acceleration"] =
      dim(Dimension::kAcceleration, [&](RunConfig&, double v) { pc.nominal_acceleration = v; });
  plan["nominal_gradient"] =
      dim(Dimension::kGradient, [&](RunConfig&, double v) { pc.nominal_gradient = v; });

  auto& noise = keys["noise"];
  noise["detection"] = dim(Dimension::kCount, [&](RunConfig&, double v) { pc.noise.detection = v; });
  noise["temperature_rel"] =
      dim(Dimension::kCount, [&](RunConfig&, double v) { pc.noise.temperature_rel = v; });
  noise["atom_rel"] = dim(Dimension::kCount, [&](RunConfig&, double v) { pc.noise.atom_rel = v; });
  noise["initial_coherent_rel"] =
      dim(Dimension::kCount, [&](RunConfig&, double v) { pc.noise.initial_coherent_rel = v; });

  auto& sw = keys["sweep"];
  sw["parameter"] = [&](const Reader&, const Entry& e, RunConfig&) { pend.parameter = e; pend.any = true; };
  sw["from"] = [&](const Reader&, const Entry& e, RunConfig&) { pend.from = e; pend.any = true; };
  sw["to"] = [&](const Reader&, const Entry& e, RunConfig&) { pend.to = e; pend.any = true; };
  sw["points"] = [&](const Reader& r, const Entry& e, RunConfig&) {
    pend.points = r.integer(e);
    if (pend.points < 1) r.fail(e, "points must be >= 1");
    pend.any = true;
  };
  sw["scale"] = [&](const Reader& r, const Entry& e, RunConfig&) {
    const std::string s = r.word(e);
    if (s != "lin" && s != "log") r.fail(e, "scale must be lin or log");
    pend.log = s == "log";
    pend.any = true;
  };

  auto& sm = keys["simulate"];
  sm["modes"] = [&](const Reader& r, const Entry& e, RunConfig&) {
    sim.modes.clear();
    for (double v : r.quantities(e, Dimension::kCount)) {
      if (v != std::floor(v) || v < 1 || v > 1000) r.fail(e, "mode indices must be integers >= 1");
      sim.modes.push_back(static_cast<int>(v));
    }
  };
  sm["t_end"] = dim(Dimension::kTime, [&](RunConfig&, double v) { sim.t_end = v; });
  sm["step"] = dim(Dimension::kTime, [&](RunConfig&, double v) { sim.step = v; });
  sm["sample_every"] = [&](const Reader& r, const Entry& e, RunConfig&) {
    sim.sample_every = r.integer(e);
    if (sim.sample_every < 1) r.fail(e, "sample_every must be >= 1");
  };
  sm["damping"] = [&](const Reader& r, const Entry& e, RunConfig&) {
    sim.damping = r.quantities(e, Dimension::kRate);
  };
  sm["initial_g"] = [&](const Reader& r, const Entry& e, RunConfig&) {
    sim.initial_g = r.quantities(e, Dimension::kCount);
  };
  sm["initial_gdot"] = [&](const Reader& r, const Entry& e, RunConfig&) {
    sim.initial_gdot = r.quantities(e, Dimension::kRate);
  };
  sm["drive_frequency"] = dim(Dimension::kFrequency, [&](RunConfig&, double v) { sim.drive_omega = v; });
  sm["drive_multiple"] = [&](const Reader& r, const Entry& e, RunConfig&) {
    sim.drive_multiple = r.integer(e);
    if (*sim.drive_multiple < 1) r.fail(e, "drive_multiple must be >= 1");
  };
  sm["phase"] = dim(Dimension::kAngle, [&](RunConfig&, double v) { sim.phase = v; });
  sm["direct"] = [&](const Reader& r, const Entry& e, RunConfig&) { sim.direct = r.boolean(e); };
  sm["parametric"] = [&](const Reader& r, const Entry& e, RunConfig&) { sim.parametric = r.boolean(e); };
  sm["coupling"] = [&](const Reader& r, const Entry& e, RunConfig&) { sim.coupling = r.boolean(e); };

  auto& dmp = keys["damping"];
  dmp["modes"] = [](const Reader& r, const Entry& e, RunConfig& c) {
    c.damping_modes = r.integer(e);
    if (c.damping_modes < 1 || c.damping_modes > 1000) r.fail(e, "modes must be in [1, 1000]");
  };

  std::string section;
  std::set<std::pair<std::string, std::string>> seen;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') {
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header");
      }
      section = trim(text.substr(1, text.size() - 2));
      if (!keys.count(section)) {
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": unknown section [" + section + "]");
      }
      if (section == "source") cfg.has_source = true;
      if (section == "simulate") cfg.has_simulate = true;
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value unit'");
    }
    if (section.empty()) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": key outside any section");
    }
    Entry e{section, trim(text.substr(0, eq)), trim(text.substr(eq + 1)), lineno};
    auto& table = keys[section];
    auto it = table.find(e.key);
    if (it == table.end()) reader.fail(e, "unknown key");
    if (!seen.insert({section, e.key}).second) reader.fail(e, "duplicate key");
    it->second(reader, e, cfg);
  }

  if (pend.custom_any) {
    if (pend.custom.name.empty() || !(pend.custom.mass > 0.0) || !(pend.custom.interaction > 0.0)) {
      throw ConfigError(origin + ": [species] needs name, mass and interaction");
    }
  }
  if (pend.species_name) {
    if (pend.custom_any && pend.custom.name == *pend.species_name) {
      cfg.request.species = pend.custom;
    } else if (auto b = builtin_species(*pend.species_name)) {
      cfg.request.species = *b;
    } else {
      reader.fail(*pend.species_ref, "unknown species '" + *pend.species_name +
                                         "' (Rb87, Yb168 or a [species] section)");
    }
    cfg.has_species = true;
  } else if (pend.custom_any) {
    cfg.request.species = pend.custom;
    cfg.has_species = true;
  }

  if (pend.any) {
    if (!pend.parameter || !pend.from || !pend.to || pend.points == 0) {
      throw ConfigError(origin + ": [sweep] needs parameter, from, to and points");
    }
    auto p = parse_sweep_parameter(reader.word(*pend.parameter));
    if (!p) {
      reader.fail(*pend.parameter, "not a sweepable parameter (valid: " + sweep_parameter_list() + ")");
    }
    Dimension d = Dimension::kCount;
    switch (*p) {
      case SweepParameter::kMass: d = Dimension::kMass; break;
      case SweepParameter::kRMin:
      case SweepParameter::kStroke:
      case SweepParameter::kLength: d = Dimension::kLength; break;
      case SweepParameter::kDensity: d = Dimension::kNumberDensity; break;
      case SweepParameter::kTemperature: d = Dimension::kTemperature; break;
      case SweepParameter::kInteractionTime: d = Dimension::kTime; break;
      case SweepParameter::kAtomNumber:
      case SweepParameter::kRepetitions: d = Dimension::kCount; break;
    }
    SweepAxis axis;
    axis.parameter = *p;
    axis.from = reader.quantity(*pend.from, d);
    axis.to = reader.quantity(*pend.to, d);
    axis.points = pend.points;
    axis.log = pend.log;
    try {
      axis.validate();
    } catch (const DomainError& err) {
      throw ConfigError(origin + ": [sweep] " + err.what());
    }
    cfg.sweep = axis;
  }
  if (!sim.initial_g.empty() && sim.initial_g.size() != sim.modes.size()) {
    throw ConfigError(origin + ": [simulate] initial_g needs one value per mode");
  }
  if (!sim.initial_gdot.empty() && sim.initial_gdot.size() != sim.modes.size()) {
    throw ConfigError(origin + ": [simulate] initial_gdot needs one value per mode");
  }
  if (!sim.damping.empty() && sim.damping.size() != 1 && sim.damping.size() != sim.modes.size()) {
    throw ConfigError(origin + ": [simulate] damping needs one value or one per mode");
  }
  if (sim.drive_omega && sim.drive_multiple) {
    throw ConfigError(origin + ": [simulate] give drive_frequency or drive_multiple, not both");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in, path);
}

CondensateSpec condensate_from(const RunConfig& config) {
  if (!config.has_species) throw ConfigError(config.origin + ": [condensate] species missing");
  const PlanConstraints& c = config.request.constraints;
  CondensateSpec spec;
  spec.species = config.request.species;
  spec.length = c.length.value_or(scheme_length(config.request.scheme, config.request.target));
  spec.density = c.density;
  spec.temperature = c.temperature;
  spec.atom_number = c.atom_number;
  spec.validate();
  return spec;
}

}  // namespace becgrav
