#pragma once

#include <limits>
#include <vector>

#include "renq/pulse/gaussian_pulse.hpp"

namespace renq {

enum class ErrorModel { first_order, full };

// Detunings in units of delta_omega_min.
struct DetuningGrid {
  std::vector<double> points;
  bool refine_peaks = true;

  // 64 log-spaced points over [1, 16]
  static DetuningGrid standard();
  static DetuningGrid log_spaced(double lo, double hi, int count);
};

struct PulseOptimizationResult {
  double T_pi;       // s
  double omega0;     // rad/s
  double T;          // s
  double T_cut;      // s
  double max_error;  // on the reported grid
  double worst_detuning;               // rad/s
  std::vector<double> detuning_grid;   // rad/s
};

struct OptimizerSettings {
  ErrorModel model = ErrorModel::full;
  DetuningGrid grid = DetuningGrid::standard();
  double phase_per_step = 0.05;
  double rel_tol = 1e-4;        // on T_pi
  double scan_step = 0.1;       // in T_cut * delta_omega_min
  double tcut_max = 40.0;       // in 1/delta_omega_min
  double x_min = 0.5;
  double x_max = 6.0;
  int x_coarse = 14;
};

// Dimensionless problem, delta_omega_min = 1. Caches the minimum over x of the worst-case
// error at each scanned T_cut so several thresholds share one sweep.
class PiPulseFrontier {
 public:
  explicit PiPulseFrontier(OptimizerSettings settings = {});

  struct Point {
    double tcut;
    double x;
    double error;
    double worst_detuning;
    bool aborted = false;  // error is only a lower bound
  };

  // worst-case error over the grid for fixed (T_cut, x); stops once the error exceeds abort_above
  Point worst_case(double tcut, double x, double abort_above = std::numeric_limits<double>::infinity()) const;
  // best x at fixed T_cut
  Point best_at(double tcut) const;
  // smallest T_cut with best_at(T_cut).error <= threshold
  Point minimal(double threshold);

  const OptimizerSettings& settings() const { return settings_; }
  const std::vector<Point>& scanned() const { return scan_; }

 private:
  void extend_to(double tcut);

  OptimizerSettings settings_;
  std::vector<Point> scan_;
};

// Minimal T_pi = 2 T_cut with error below threshold for all grid detunings >= delta_omega_min.
PulseOptimizationResult optimize_pi_pulse(double error_threshold, double delta_omega_min,
                                          const OptimizerSettings& settings = {});
PulseOptimizationResult optimize_pi_pulse(double error_threshold, double delta_omega_min, PiPulseFrontier& frontier);

}  // namespace renq
