#include "renq/analysis/robustness.hpp"

#include <cmath>

#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"
#include "renq/gates/cnot.hpp"

namespace renq {

RobustnessBudget robustness_budget(const RegimeParams& p, double B_ac, double r) {
  if (!(B_ac > 0) || !(r > 0)) throw InputError("robustness_budget: B_ac and r must be positive");
  if (!(p.J_dip > 0) || !(p.A_J > 0) || !(p.E_Z > 0)) throw InputError("robustness_budget: J_dip, A_J, E_Z must be positive");
  if (!(p.J_dip < p.A_J && p.A_J < p.E_Z)) throw RegimeError("robustness_budget: J_dip < A_J < E_Z required");
  using namespace constants;
  RobustnessBudget b;
  b.dphi_single = mu_0 * mu_N / (4 * pi * r * r * r * B_ac);
  b.flip_suppression = std::pow(p.J_dip / p.E_Z, 2);
  b.dphi_cnot = 2 * pi * p.A_J * b.flip_suppression * cnot_time(p.J_dip);
  b.J_hop = p.J_dip * std::pow(p.A_J / p.E_Z, 2);
  b.ops_single = 1 / (b.dphi_single * b.dphi_single);
  b.ops_cnot = 1 / (b.dphi_cnot * b.dphi_cnot);
  return b;
}

}  // namespace renq
