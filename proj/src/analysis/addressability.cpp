#include "renq/analysis/addressability.hpp"

#include <cmath>

#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"
#include "renq/pulse/pi_pulse_optimizer.hpp"

namespace renq {

double stark_detuning_required(double N, double r, double F_act, double F_cnot) {
  if (!(N >= 1)) throw InputError("stark_detuning_required: N must be >= 1");
  if (!(r > 0)) throw InputError("stark_detuning_required: r must be positive");
  if (!(F_act > 0 && F_act < 1) || !(F_cnot > 0 && F_cnot < 1))
    throw InputError("stark_detuning_required: fidelities must lie in (0, 1)");
  using namespace constants;
  const double pref = 2 * std::sqrt(2.0) * mu_0 * mu_B * mu_B / (pi * pi * hbar * r * r * r);
  const double lg = std::log(N * pi * pi / (4 * (1 - F_act)));
  return pref * std::sqrt(lg / (1 - F_cnot));
}

AddressabilityBudget addressability_budget(double N, double r, double F_act, double F_cnot,
                                           double stark_coefficient) {
  if (!(stark_coefficient > 0)) throw InputError("addressability_budget: Stark coefficient must be positive");
  AddressabilityBudget b{N, r, F_act, F_cnot, stark_detuning_required(N, r, F_act, F_cnot), 0, stark_coefficient};
  b.delta_E = b.delta_omega_st / (2 * constants::pi * stark_coefficient);
  return b;
}

double activation_rabi_bound(double delta_omega, double F_pi) {
  if (!(F_pi > 0 && F_pi < 1)) throw InputError("activation_rabi_bound: F_pi must lie in (0, 1)");
  const double lg = std::log(constants::pi * constants::pi / (4 * (1 - F_pi)));
  if (!(lg > 0)) throw InputError("activation_rabi_bound: 1 - F_pi too large for the bound");
  return delta_omega * std::sqrt(constants::pi / (2 * lg));
}

double activation_rabi_ratio_numeric(double F_pi) {
  if (!(F_pi > 0 && F_pi < 1)) throw InputError("activation_rabi_ratio_numeric: F_pi must lie in (0, 1)");
  constexpr double x = 6.0;  // T_cut / T; erf(6) = 1 to double precision
  OptimizerSettings s;
  s.model = ErrorModel::full;
  s.grid = DetuningGrid::log_spaced(1.0, 16.0, 96);
  PiPulseFrontier f(s);
  const double target = 1 - F_pi;
  // ratio rho = omega0 / delta_omega with delta_omega = 1: T = sqrt(pi) / rho
  auto err = [&](double rho) { return f.worst_case(x * std::sqrt(constants::pi) / rho, x).error; };
  double lo = 0.05, hi = 1.0;
  if (err(lo) > target) throw InfeasibleError("activation_rabi_ratio_numeric: threshold unreachable");
  while (err(hi) <= target) hi *= 2;
  for (int i = 0; i < 50 && hi - lo > 1e-6 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (err(mid) <= target ? lo : hi) = mid;
  }
  return lo;
}

double bare_rabi_frequency(double B_ac) {
  if (!(B_ac > 0)) throw InputError("bare_rabi_frequency: B_ac must be positive");
  return constants::mu_B * B_ac / constants::hbar;
}

}  // namespace renq
