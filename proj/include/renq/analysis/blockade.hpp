#pragma once

#include <vector>

#include "renq/pulse/pi_pulse_optimizer.hpp"

namespace renq {

struct BlockadeComparison {
  double target_error;
  double blockade_time;  // s
  double direct_time;    // s, pi hbar / (4 J_dip) with J_dip / hbar = delta_omega / 2
  double speedup;        // blockade_time / direct_time
};

// Direct-gate time for the blockade detuning convention delta_omega / 2 = J_dip / hbar.
double direct_gate_time(double delta_omega);

// Target-qubit pulses of the blockade CNOT: two pulses at (1-F)/2 and one at (1-F).
double blockade_gate_time(double target_error, double delta_omega, ErrorModel mode);
double blockade_gate_time(double target_error, double delta_omega, PiPulseFrontier& frontier);

// T_pi * delta_omega = a [2 L - log(L / 2)] + b with L = log(1/(1-F))
struct GateTimeFit {
  double a = 0;
  double b = 0;
  double error_lo = 0;  // fit window in 1-F
  double error_hi = 0;
  int points = 0;
  double rms = 0;
};

// 2 L - log(L / 2)
double fit_abscissa(double error);

// Plain least squares over the supplied (error, T_pi * delta_omega) pairs inside [lo, hi].
GateTimeFit fit_gate_time(const std::vector<double>& errors, const std::vector<double>& t_pi_dw, double lo, double hi);

struct SpeedupPoint {
  BlockadeComparison numeric;
  double single_t_pi_dw;  // optimized single pi-pulse T_pi * delta_omega at the target error
  double overlay;         // 6/pi (2 a log(1/(1-F)) + b)
};

struct SpeedupCurve {
  ErrorModel mode;
  std::vector<SpeedupPoint> points;
  GateTimeFit fit;
};

// Evaluated with delta_omega = 1 (the speed-up is scale free). The fit uses grid points
// inside [fit_lo, fit_hi].
SpeedupCurve speedup_curve(const std::vector<double>& errors, ErrorModel mode, double fit_lo = 1e-8,
                           double fit_hi = 1e-2);
SpeedupCurve speedup_curve(const std::vector<double>& errors, PiPulseFrontier& frontier, double fit_lo = 1e-8,
                           double fit_hi = 1e-2);

double speedup_formula(double target_error, const GateTimeFit& fit);

// log-uniform errors from 10^hi_exp down to 10^lo_exp in steps of `step` decades
std::vector<double> error_grid(double hi_exp, double lo_exp, double step);

struct OscillationSpacing {
  std::vector<double> peaks;  // T_pi * delta_omega at the plateaus of the achievable error
  double mean_spacing = 0;
  double expected = 0;        // 4 pi
};

// Plateaus of the best achievable error as a function of T_pi on the frontier scan
// (fidelity maxima of the oscillating error). Needs a scan with error below 0.1.
OscillationSpacing oscillation_spacing(const PiPulseFrontier& frontier);

}  // namespace renq
