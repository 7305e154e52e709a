#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "becgrav/condensate.hpp"
#include "becgrav/gaussian_state.hpp"
#include "becgrav/grav_source.hpp"

namespace becgrav {

// Bogoliubov mode functions u_n = alpha_n phi_n, v_n = beta_n phi_n on the box,
// phi_n(x) = cos(k_n (x + L/2)), normalized to int (u^2 - v^2) dV = 1.
struct ModeFunctions {
  int n = 0;
  double wavenumber = 0.0;
  double length = 0.0;
  double alpha = 0.0;  // 1/m^(3/2)
  double beta = 0.0;   // 1/m^(3/2)

  double phi(double x) const;
  double u(double x) const { return alpha * phi(x); }
  double v(double x) const { return beta * phi(x); }
};

ModeFunctions mode_functions(const CondensateSpec& spec, const CondensateParams& params, int n);

// All amplitudes are purely imaginary; the fields hold Im(M) in joules.
struct TransitionAmplitudes {
  int n = 0;
  int l = 0;
  double displacement = 0.0;  // M_0n
  double squeeze = 0.0;       // M_nn
  double pair = 0.0;          // M_ln (equals M_nn when l == n)
  double mix_a = 0.0;         // A_ln
  double mix_b = 0.0;         // B_ln
};

// Leading order in k zeta. Only the displacement amplitude depends on N_a.
double displacement_amplitude_closed(const CondensateSpec& spec, const CondensateParams& params,
                                     const FieldAmplitudes& ampl, int n);
double squeeze_amplitude_closed(const CondensateSpec& spec, const CondensateParams& params,
                                const FieldAmplitudes& ampl, int n);
// M_ln for l != n; M_nn for l == n.
double pair_amplitude_closed(const CondensateSpec& spec, const CondensateParams& params,
                             const FieldAmplitudes& ampl, int n, int l);
TransitionAmplitudes amplitudes_closed(const CondensateSpec& spec, const CondensateParams& params,
                                       const FieldAmplitudes& ampl, int n, int l);
// Adaptive quadrature of the overlap integrals with the exact mode functions.
TransitionAmplitudes amplitudes_exact(const CondensateSpec& spec, const CondensateParams& params,
                                      const FieldAmplitudes& ampl, int n, int l);

// n_Omega = L Omega / (pi c0), required to be an integer within rel_tol.
double resonance_ratio(const CondensateSpec& spec, const CondensateParams& params,
                       double drive_omega);
int resonant_index(const CondensateSpec& spec, const CondensateParams& params, double drive_omega,
                   double rel_tol = 1e-6);

struct ResonantChannels {
  int n_omega = 0;
  std::optional<int> displacement;
  std::optional<int> single_squeeze;
  std::vector<std::pair<int, int>> pairs;   // (l, n_Omega - l), l < n_Omega - l
  std::vector<std::pair<int, int>> mixing;  // (l, l - n_Omega)
};

ResonantChannels resonant_channels(int n_omega, int max_mode);

struct ChannelParameters {
  double displacement = 0.0;  // alpha_n
  double squeeze = 0.0;       // r_n
  double pair = 0.0;          // r_ln
  double mixing = 0.0;        // Theta_ln
};

ChannelParameters channel_parameters(const TransitionAmplitudes& amps, double t);

// Closed-form phonon numbers.
// Total phonons of S(r) D(alpha) S(r0 e^{i theta0}) |0>.
double displaced_squeezed_number(std::complex<double> alpha, double r0, double theta0, double r);
// Coherent part |alpha* cosh r - alpha sinh r|^2 of the above.
double displaced_squeezed_coherent(std::complex<double> alpha, double r);

struct TwoModeNumbers {
  double mode = 0.0;
  double partner = 0.0;
  double partner_coherent = 0.0;
};
TwoModeNumbers two_mode_numbers(double initial, double r, double initial_coherent = 0.0);

// Mode n between two empty neighbours n -/+ n_Omega, rotated by Theta-/+:
// N0 cos^2(sqrt(Theta-^2 + Theta+^2)).
double mode_mix_number(double initial, double theta_minus, double theta_plus);
// Second-order expansion of mode_mix_number.
double mode_mix_number_leading_order(double initial, double theta_minus, double theta_plus);

// Resonant channel as an engine operation; slots refer to a GaussianState.
struct ChannelOp {
  enum class Kind { kDisplacement, kSqueeze, kTwoModeSqueeze, kBeamsplitter };
  Kind kind = Kind::kDisplacement;
  int slot_a = 0;
  int slot_b = 0;
  double parameter = 0.0;  // alpha (real), r, or Theta
  double angle = 0.0;
};

// Channels resonant at n_Omega among the modes held in slot_modes (slot i
// holds mode number slot_modes[i]), with strengths after time t.
std::vector<ChannelOp> resonant_operations(const CondensateSpec& spec,
                                           const CondensateParams& params,
                                           const FieldAmplitudes& ampl, int n_omega,
                                           const std::vector<int>& slot_modes, double t);

void apply_channel(GaussianState& state, const ChannelOp& op, double fraction = 1.0);

inline constexpr int kCombinedSplittingSteps = 100;

// Approximate joint evolution: first-order splitting of all channels.
void apply_combined(GaussianState& state, const std::vector<ChannelOp>& ops,
                    int steps = kCombinedSplittingSteps);

}  // namespace becgrav
