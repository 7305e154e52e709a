#pragma once

#include <numbers>

namespace becgrav::constants {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt2 = std::numbers::sqrt2;

inline constexpr double kG = 6.674e-11;              // m^3 kg^-1 s^-2
inline constexpr double kHbar = 1.054571817e-34;     // J s
inline constexpr double kBoltzmann = 1.380649e-23;   // J / K

// Gold / tungsten.
inline constexpr double kSourceDensity = 19300.0;    // kg / m^3

}  // namespace becgrav::constants
