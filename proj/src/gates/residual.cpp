#include "renq/gates/residual.hpp"

#include <cmath>

#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"
#include "renq/ion/hamiltonian.hpp"

namespace renq {

double fidelity_bound_resonant(double V, double j_dip) {
  if (j_dip == 0) throw InputError("fidelity_bound_resonant: J_dip must be nonzero");
  const double x = constants::pi * V / (4 * j_dip);
  return 1 - x * x;
}

double fidelity_bound_offresonant(double V, double delta) {
  if (delta == 0) throw InputError("fidelity_bound_offresonant: detuning must be nonzero");
  const double x = 2 * V / delta;
  return 1 - x * x;
}

const char* to_string(ErrorChannel c) {
  switch (c) {
    case ErrorChannel::coherence: return "coherence";
    case ErrorChannel::activation_time: return "activation_time";
    case ErrorChannel::residual_resonant: return "residual_resonant";
    case ErrorChannel::residual_offresonant: return "residual_offresonant";
  }
  return "unknown";
}

RegimeParams typical_regime(double r, double g_perp_over_par) {
  if (!(r > 0)) throw InputError("typical_regime: r must be positive");
  RegimeParams p;
  p.J_dip = constants::mu_0 * constants::mu_B * constants::mu_B / (4 * constants::pi * r * r * r) / constants::h;
  p.A_J = 1e9;
  p.E_Z = constants::mu_B * 1.0 / constants::h;
  p.E_Zn = 1e7;
  p.delta_CF = 1e11;
  p.g_perp_over_par = g_perp_over_par;
  return p;
}

ResidualEstimate encoding_error_scaling(ActiveKind kind, const RegimeParams& p) {
  const double J = std::abs(p.J_dip), A = std::abs(p.A_J), ez = std::abs(p.E_Z), ezn = std::abs(p.E_Zn),
               cf = std::abs(p.delta_CF);
  if (!(J < A)) throw RegimeError("encoding_error_scaling: J_dip < A_J violated");
  if (!(A < ez)) throw RegimeError("encoding_error_scaling: A_J < E_Z violated");
  if (!(ez < cf)) throw RegimeError("encoding_error_scaling: E_Z < delta_CF violated");

  if (p.g_perp_over_par > 1e-9) {
    if (kind == ActiveKind::electronic) {
      const double g2 = std::min(1.0, p.g_perp_over_par * p.g_perp_over_par);
      return {g2, ErrorChannel::residual_resonant, "resonant electronic flip-flop (g_perp/g_par)^2"};
    }
    const double resonant = std::pow(A / ez, 4);
    const double hyperfine = std::pow(J / A, 2);
    if (resonant >= hyperfine) return {resonant, ErrorChannel::residual_resonant, "electro-nuclear flip-flop (A_J/E_Z)^4"};
    return {hyperfine, ErrorChannel::residual_offresonant, "electronic flip-flop detuned by A_J (J_dip/A_J)^2"};
  }

  const double cf_term = std::pow(J / cf, 2);
  double nuc = std::pow(A / cf, 4);
  if (kind == ActiveKind::electronic) nuc *= std::pow(J / std::max(J, ezn), 2);
  if (cf_term >= nuc) return {cf_term, ErrorChannel::residual_offresonant, "crystal-field admixture (J_dip/delta_CF)^2"};
  ErrorChannel ch = (kind == ActiveKind::electronic && ezn <= J) ? ErrorChannel::residual_resonant
                                                                 : ErrorChannel::residual_offresonant;
  return {nuc, ch, kind == ActiveKind::electronic ? "nuclear flip-flop via crystal field" : "hyperfine crystal-field tunneling (A_J/delta_CF)^4"};
}

double flipflop_crossover_radius(const RegimeParams& p, double r_ref) {
  if (!(p.J_dip > 0) || !(p.A_J > 0) || !(p.E_Z > 0) || !(r_ref > 0))
    throw InputError("flipflop_crossover_radius: positive energies and distance required");
  // J(r) = J_ref (r_ref / r)^3 ; (J/A)^2 = (A/E_Z)^4  <=>  J = A^3 / E_Z^2
  const double j_star = std::pow(p.A_J, 3) / (p.E_Z * p.E_Z);
  return r_ref * std::cbrt(p.J_dip / j_star);
}

}  // namespace renq
