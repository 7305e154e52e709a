#include "becgrav/state_script.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include "becgrav/errors.hpp"

namespace becgrav {

namespace {

struct Arity {
  std::size_t min = 0;
  std::size_t max = 0;
};

const std::map<std::string, Arity>& verbs() {
  static const std::map<std::string, Arity> v = {
      {"modes", {1, 1}},        {"thermal", {2, 2}}, {"displace", {3, 3}},
      {"squeeze", {2, 3}},      {"two_mode", {3, 4}}, {"beamsplitter", {3, 3}},
      {"rotate", {2, 2}},       {"check", {0, 0}},   {"print", {0, 0}},
  };
  return v;
}

int slot(const StateCommand& c, std::size_t i) {
  const double v = c.args.at(i);
  if (v != std::floor(v) || v < 0) {
    throw ConfigError("line " + std::to_string(c.line) + ": slot must be a non-negative integer");
  }
  return static_cast<int>(v);
}

double arg_or(const StateCommand& c, std::size_t i, double fallback) {
  return i < c.args.size() ? c.args[i] : fallback;
}

}  // namespace

std::vector<StateCommand> parse_state_script(std::istream& in, const std::string& origin) {
  std::vector<StateCommand> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    std::istringstream ls(hash == std::string::npos ? raw : raw.substr(0, hash));
    StateCommand cmd;
    cmd.line = lineno;
    if (!(ls >> cmd.verb)) continue;
    auto it = verbs().find(cmd.verb);
    if (it == verbs().end()) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": unknown command '" + cmd.verb + "'");
    }
    std::string tok;
    while (ls >> tok) {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": '" + tok + "' is not a number");
      }
      cmd.args.push_back(v);
    }
    if (cmd.args.size() < it->second.min || cmd.args.size() > it->second.max) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": wrong argument count for '" +
                        cmd.verb + "'");
    }
    out.push_back(std::move(cmd));
  }
  return out;
}

StateSession run_state_script(const std::vector<StateCommand>& commands, std::ostream& out) {
  StateSession s;
  std::vector<double> occupations{0.0};
  bool started = false;  // a channel has been applied
  bool sized = false;
  for (const auto& c : commands) {
    const std::string where = "line " + std::to_string(c.line) + ": ";
    try {
      if (c.verb == "modes") {
        if (sized || started) throw ConfigError(where + "'modes' must come first");
        const int n = slot(c, 0);
        if (n < 1) throw ConfigError(where + "need at least one mode");
        occupations.assign(static_cast<std::size_t>(n), 0.0);
        s.state = GaussianState::vacuum(n);
        sized = true;
      } else if (c.verb == "thermal") {
        if (started) throw ConfigError(where + "'thermal' must precede channels");
        const int k = slot(c, 0);
        if (k >= static_cast<int>(occupations.size())) throw ConfigError(where + "slot out of range");
        occupations[static_cast<std::size_t>(k)] = c.args[1];
        s.state = GaussianState::thermal(occupations);
        sized = true;
      } else if (c.verb == "displace") {
        s.state.displace(slot(c, 0), {c.args[1], c.args[2]});
        started = true;
      } else if (c.verb == "squeeze") {
        s.state.squeeze(slot(c, 0), c.args[1], arg_or(c, 2, 0.0));
        started = true;
      } else if (c.verb == "two_mode") {
        s.state.two_mode_squeeze(slot(c, 0), slot(c, 1), c.args[2], arg_or(c, 3, 0.0));
        started = true;
      } else if (c.verb == "beamsplitter") {
        s.state.beamsplitter(slot(c, 0), slot(c, 1), c.args[2]);
        started = true;
      } else if (c.verb == "rotate") {
        s.state.rotate(slot(c, 0), c.args[1]);
        started = true;
      } else if (c.verb == "check") {
        s.state.check_physical();
        char buf[96];
        std::snprintf(buf, sizeof buf, "check ok: nu_min = %.12g, asymmetry = %.3g",
                      s.state.min_symplectic_eigenvalue(), s.state.symmetry_defect());
        s.log.push_back(buf);
        out << buf << '\n';
      } else if (c.verb == "print") {
        s.state.write_csv(out);
      }
      s.state.check_physical();
    } catch (const DomainError& e) {
      throw DomainError(where + e.what());
    }
  }
  return s;
}

}  // namespace becgrav
