#pragma once

namespace renq {

struct AddressabilityBudget {
  double N;
  double r;                  // m
  double F_act;
  double F_CNOT;
  double delta_omega_st;     // rad/s
  double delta_E;            // V/cm
  double stark_coefficient;  // Hz/(V/cm)
};

// 2 sqrt2 mu0 mu_B^2 / (pi^2 hbar r^3) sqrt(log(N pi^2 / (4 (1-F_act))) / (1-F_CNOT)), rad/s
double stark_detuning_required(double N, double r, double F_act, double F_cnot);
AddressabilityBudget addressability_budget(double N, double r, double F_act, double F_cnot,
                                           double stark_coefficient);

// Largest Rabi frequency of a Gaussian activation pulse that leaves spectators detuned by
// delta_omega below 1 - F_pi: delta_omega sqrt(pi / (2 log(pi^2 / (4 (1-F_pi))))).
double activation_rabi_bound(double delta_omega, double F_pi);

// Exact counterpart: largest Omega0 / delta_omega of an (effectively untruncated, T_cut = 6 T)
// Gaussian pi-pulse whose flip probability stays below 1 - F_pi for every detuning >= delta_omega.
double activation_rabi_ratio_numeric(double F_pi);

// mu_B B_ac / hbar, rad/s
double bare_rabi_frequency(double B_ac);

}  // namespace renq
