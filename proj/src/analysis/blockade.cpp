#include "renq/analysis/blockade.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"

namespace renq {

double direct_gate_time(double delta_omega) {
  if (!(delta_omega > 0)) throw InputError("direct_gate_time: delta_omega must be positive");
  return constants::pi / (2 * delta_omega);
}

double blockade_gate_time(double target_error, double delta_omega, PiPulseFrontier& frontier) {
  if (!(target_error > 1e-9 && target_error < 1e-1))
    throw InputError("blockade_gate_time: target error must lie in (1e-9, 1e-1)");
  if (!(delta_omega > 0)) throw InputError("blockade_gate_time: delta_omega must be positive");
  const double half = optimize_pi_pulse(target_error / 2, delta_omega, frontier).T_pi;
  const double full = optimize_pi_pulse(target_error, delta_omega, frontier).T_pi;
  return 2 * half + full;
}

double blockade_gate_time(double target_error, double delta_omega, ErrorModel mode) {
  OptimizerSettings s;
  s.model = mode;
  PiPulseFrontier f(s);
  return blockade_gate_time(target_error, delta_omega, f);
}

double fit_abscissa(double error) {
  const double L = std::log(1 / error);
  return 2 * L - std::log(L / 2);
}

GateTimeFit fit_gate_time(const std::vector<double>& errors, const std::vector<double>& t_pi_dw, double lo,
                          double hi) {
  if (errors.size() != t_pi_dw.size()) throw InputError("fit_gate_time: size mismatch");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (errors[i] < lo * (1 - 1e-9) || errors[i] > hi * (1 + 1e-9)) continue;
    const double x = fit_abscissa(errors[i]);
    sx += x;
    sy += t_pi_dw[i];
    sxx += x * x;
    sxy += x * t_pi_dw[i];
    ++n;
  }
  if (n < 2) throw InputError("fit_gate_time: fewer than two points in the fit window");
  GateTimeFit f;
  const double det = n * sxx - sx * sx;
  if (!(std::abs(det) > 0)) throw InputError("fit_gate_time: degenerate abscissae");
  f.a = (n * sxy - sx * sy) / det;
  f.b = (sy - f.a * sx) / n;
  f.error_lo = lo;
  f.error_hi = hi;
  f.points = n;
  double ss = 0;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (errors[i] < lo * (1 - 1e-9) || errors[i] > hi * (1 + 1e-9)) continue;
    const double r = t_pi_dw[i] - (f.a * fit_abscissa(errors[i]) + f.b);
    ss += r * r;
  }
  f.rms = std::sqrt(ss / n);
  return f;
}

double speedup_formula(double target_error, const GateTimeFit& fit) {
  return 6 / constants::pi * (2 * fit.a * std::log(1 / target_error) + fit.b);
}

std::vector<double> error_grid(double hi_exp, double lo_exp, double step) {
  if (!(step > 0) || hi_exp < lo_exp) throw InputError("error_grid: need hi_exp >= lo_exp and step > 0");
  std::vector<double> out;
  const int n = static_cast<int>(std::floor((hi_exp - lo_exp) / step + 1e-9));
  for (int k = 0; k <= n; ++k) out.push_back(std::pow(10.0, hi_exp - k * step));
  return out;
}

SpeedupCurve speedup_curve(const std::vector<double>& errors, PiPulseFrontier& frontier, double fit_lo,
                           double fit_hi) {
  SpeedupCurve c;
  c.mode = frontier.settings().model;
  std::vector<double> single;
  for (double e : errors) {
    SpeedupPoint p;
    p.single_t_pi_dw = optimize_pi_pulse(e, 1.0, frontier).T_pi;
    const double t = blockade_gate_time(e, 1.0, frontier);
    const double d = direct_gate_time(1.0);
    p.numeric = {e, t, d, t / d};
    single.push_back(p.single_t_pi_dw);
    c.points.push_back(p);
  }
  c.fit = fit_gate_time(errors, single, fit_lo, fit_hi);
  for (auto& p : c.points) p.overlay = speedup_formula(p.numeric.target_error, c.fit);
  return c;
}

SpeedupCurve speedup_curve(const std::vector<double>& errors, ErrorModel mode, double fit_lo, double fit_hi) {
  OptimizerSettings s;
  s.model = mode;
  PiPulseFrontier f(s);
  return speedup_curve(errors, f, fit_lo, fit_hi);
}

OscillationSpacing oscillation_spacing(const PiPulseFrontier& frontier) {
  OscillationSpacing out;
  out.expected = 4 * constants::pi;
  // The achievable error (running minimum over the scan) falls in steps; the maxima of
  // the fidelity oscillation show up as plateaus where the decay rate d log(err)/dT_pi,
  // averaged over a window of width 2 / delta_omega, nearly vanishes. Each plateau
  // contributes its midpoint.
  const double rate_flat = 0.1, half_window = 1.0;
  const auto& s = frontier.scanned();
  std::vector<double> t, best;
  double run = std::numeric_limits<double>::infinity();
  for (const auto& p : s) {
    run = std::min(run, p.error);
    t.push_back(2 * p.tcut);
    best.push_back(run);
  }
  double start = -1, last = -1;
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    while (t[lo] < t[i] - half_window) ++lo;
    while (hi + 1 < t.size() && t[hi + 1] <= t[i] + half_window) ++hi;
    const bool full = t[i] - half_window >= t.front() && t[i] + half_window <= t.back();
    bool flat = false;
    if (full && hi > lo) flat = std::log(best[lo] / best[hi]) / (t[hi] - t[lo]) < rate_flat && best[i] < 0.1;
    if (flat) {
      if (start < 0) start = t[i];
      last = t[i];
    } else if (start >= 0) {
      out.peaks.push_back(0.5 * (start + last));
      start = -1;
    }
  }
  if (out.peaks.size() >= 2) out.mean_spacing = (out.peaks.back() - out.peaks.front()) / (out.peaks.size() - 1);
  return out;
}

}  // namespace renq
