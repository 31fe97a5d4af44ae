#pragma once

#include "renq/core/matrix.hpp"

namespace renq {

// Truncated Gaussian: Omega(t) = omega0 exp(-t^2/T^2) for |t| <= T_cut.
struct PulseSpec {
  double omega0 = 0;    // rad/s
  double T = 0;         // s
  double T_cut = 0;     // s
  double detuning = 0;  // rad/s

  PulseSpec() = default;
  PulseSpec(double omega0, double T, double T_cut, double detuning);

  double envelope(double t) const;
  double duration() const { return 2 * T_cut; }
  // pulse with omega0 chosen so the resonant area is pi: omega0 = sqrt(pi) / (T erf(T_cut/T))
  static PulseSpec pi_pulse(double T, double T_cut, double detuning);
};

// (detuning/2) sigma_z + (Omega(t)/2) sigma_x, returned as H/hbar in rad/s.
ComplexMatrix rwa_hamiltonian(const PulseSpec& pulse, double t);

// Solves T = sqrt(pi) / (omega0 erf(T_cut/T)). Requires omega0 T_cut > pi/2.
double solve_pi_width(double omega0, double T_cut);

// Propagator of the RWA Hamiltonian over [-T_cut, T_cut] in steps of at most
// phase_per_step radians; each step is a closed-form SU(2) rotation with the exact
// step-averaged envelope.
ComplexMatrix pulse_propagator(const PulseSpec& pulse, double phase_per_step = 0.05);
// |U_10|^2 of pulse_propagator without building matrices.
double flip_probability(const PulseSpec& pulse, double phase_per_step = 0.05);

enum class PulseTarget {
  automatic,  // flip on resonance, idle otherwise
  flip,
  idle,
};

// 1 - F_min against the target, after removing the diagonal (virtual Z) phases.
double pulse_error_exact(const PulseSpec& pulse, PulseTarget target = PulseTarget::automatic,
                         double phase_per_step = 0.05);

// Leading-order flip probability with large-argument erf expansion; x = T_cut/T, y = detuning T/2.
double pulse_error_first_order(const PulseSpec& pulse);
double pulse_error_first_order_xy(double x, double y);

}  // namespace renq
