#pragma once

namespace renq {

struct AnalyticGateTime {
  double T_pi_delta_omega;  // T_pi * delta_omega
  double alpha;
  double beta;
  double leading;  // 2L - log(L/2)
};

// Leading-order asymptotics of the first-order error with x = S - log(S)/(2S) + alpha/S,
// y = S + beta/S, S = sqrt(L/2), L = log(1/(1-F)). alpha + beta is minimized subject to the
// error staying below 1-F for every larger detuning.
AnalyticGateTime analytic_gate_time(double error_threshold);

}  // namespace renq
