#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "becgrav/gaussian_state.hpp"

// Gaussian-state session scripts, one command per line, 0-based slots:
//   modes N | thermal s nbar | displace s re im | squeeze s r [angle]
//   two_mode a b r [angle] | beamsplitter a b theta | rotate s angle
//   check | print
// '#' starts a comment. "modes" (or "thermal" on a fresh session) must come first.

namespace becgrav {

struct StateCommand {
  std::string verb;
  std::vector<double> args;
  int line = 0;
};

std::vector<StateCommand> parse_state_script(std::istream& in,
                                             const std::string& origin = "<script>");

struct StateSession {
  GaussianState state = GaussianState::vacuum(1);
  std::vector<std::string> log;
};

// Runs the commands, writing "print" output to out; check_physical runs after
// every channel.
StateSession run_state_script(const std::vector<StateCommand>& commands, std::ostream& out);

}  // namespace becgrav
