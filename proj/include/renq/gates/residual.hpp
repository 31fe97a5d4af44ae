#pragma once

#include <string>

namespace renq {

// 1 - (pi V / (4 J_dip))^2
double fidelity_bound_resonant(double V, double j_dip);
// 1 - (2 V / delta)^2
double fidelity_bound_offresonant(double V, double delta);

enum class ErrorChannel { coherence, activation_time, residual_resonant, residual_offresonant };
const char* to_string(ErrorChannel c);

// Energies as E/h in Hz.
struct RegimeParams {
  double J_dip = 0;
  double A_J = 0;
  double E_Z = 0;   // electronic Zeeman scale mu_B B
  double E_Zn = 0;  // nuclear Zeeman energy
  double delta_CF = 0;
  double g_perp_over_par = 0;
};

// Order-of-magnitude parameters used for the generic estimates: A_J/h = 1 GHz,
// delta_CF/h = 100 GHz, B = 1 T (E_Z = mu_B B), E_Zn/h = 10 MHz, mu_m = mu_B, r-perpendicular.
RegimeParams typical_regime(double r, double g_perp_over_par);

enum class ActiveKind { electro_nuclear, electronic };

struct ResidualEstimate {
  double infidelity;
  ErrorChannel channel;
  std::string process;
};

// Dominant residual infidelity; requires J_dip < A_J < E_Z < delta_CF (RegimeError otherwise).
ResidualEstimate encoding_error_scaling(ActiveKind kind, const RegimeParams& p);

// r (m) where (J_dip/A_J)^2 reaches (A_J/E_Z)^4, given p.J_dip at the reference distance r_ref
double flipflop_crossover_radius(const RegimeParams& p, double r_ref);

}  // namespace renq
