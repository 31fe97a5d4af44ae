#pragma once

#include "renq/gates/residual.hpp"

namespace renq {

struct RobustnessBudget {
  double dphi_single;       // rad, passive-qubit phase per single-qubit operation on a neighbour
  double dphi_cnot;         // rad, per CNOT on a neighbour
  double flip_suppression;  // (J_dip/E_Z)^2
  double J_hop;             // Hz, J_dip (A_J/E_Z)^2
  double ops_single;        // operations to O(1) accumulated error, 1/dphi^2
  double ops_cnot;
};

// p supplies J_dip, A_J and E_Z in Hz; B_ac in T; r in m.
// dphi_single = mu0 mu_N / (4 pi r^3 B_ac); dphi_cnot = (A_J/hbar) (J_dip/E_Z)^2 t_CNOT.
RobustnessBudget robustness_budget(const RegimeParams& p, double B_ac, double r);

}  // namespace renq
