#include "renq/pulse/pi_pulse_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "renq/core/errors.hpp"
#include "renq/core/parallel.hpp"

namespace renq {

namespace {

constexpr double kGolden = 0.6180339887498949;
constexpr int kPeakIterations = 20;
constexpr int kXIterations = 22;
// peaks far below the current maximum are not refined
constexpr double kPeakFloor = 1e-2;

double golden_max(const auto& f, double lo, double hi, int iterations, double& arg) {
  double a = lo, b = hi;
  double c = b - kGolden * (b - a), d = a + kGolden * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = f(d);
    }
  }
  if (fc > fd) {
    arg = c;
    return fc;
  }
  arg = d;
  return fd;
}

}  // namespace

DetuningGrid DetuningGrid::standard() { return log_spaced(1.0, 16.0, 64); }

DetuningGrid DetuningGrid::log_spaced(double lo, double hi, int count) {
  if (!(lo > 0) || !(hi > lo) || count < 2) throw InputError("detuning grid: need 0 < lo < hi and count >= 2");
  DetuningGrid g;
  for (int k = 0; k < count; ++k) g.points.push_back(lo * std::pow(hi / lo, static_cast<double>(k) / (count - 1)));
  return g;
}

PiPulseFrontier::PiPulseFrontier(OptimizerSettings s) : settings_(std::move(s)) {
  auto& p = settings_.grid.points;
  if (p.empty()) throw InputError("optimizer: empty detuning grid");
  std::sort(p.begin(), p.end());
  if (!(p.front() > 0)) throw InputError("optimizer: detunings must be positive");
}

PiPulseFrontier::Point PiPulseFrontier::worst_case(double tcut, double x, double abort_above) const {
  const double T = tcut / x;
  const PulseSpec base = PulseSpec::pi_pulse(T, tcut, 0.0);
  auto err = [&](double d) {
    PulseSpec p = base;
    p.detuning = d;
    return settings_.model == ErrorModel::full ? flip_probability(p, settings_.phase_per_step)
                                               : pulse_error_first_order(p);
  };
  const auto& g = settings_.grid.points;
  std::vector<double> e(g.size());
  Point best{tcut, x, 0.0, g.front(), false};
  // ascending detuning: the largest errors come first, so dominated candidates stop early
  for (std::size_t i = 0; i < g.size(); ++i) {
    e[i] = err(g[i]);
    if (e[i] > best.error) best = {tcut, x, e[i], g[i], false};
    if (best.error > abort_above) {
      best.aborted = true;
      return best;
    }
  }
  if (settings_.grid.refine_peaks && g.size() >= 3) {
    const double floor = kPeakFloor * best.error;
    for (std::size_t i = 0; i < g.size(); ++i) {
      bool left = i == 0 || e[i] >= e[i - 1];
      bool right = i + 1 == g.size() || e[i] >= e[i + 1];
      if (!(left && right) || e[i] < floor) continue;
      double lo = g[i == 0 ? 0 : i - 1], hi = g[i + 1 == g.size() ? i : i + 1];
      if (hi <= lo) continue;
      double arg = g[i];
      double v = golden_max(err, lo, hi, kPeakIterations, arg);
      if (v > best.error) best = {tcut, x, v, arg, false};
      if (best.error > abort_above) {
        best.aborted = true;
        return best;
      }
    }
  }
  return best;
}

PiPulseFrontier::Point PiPulseFrontier::best_at(double tcut) const {
  const int n = std::max(settings_.x_coarse, 3);
  std::vector<double> xs(n);
  for (int k = 0; k < n; ++k) xs[k] = settings_.x_min + (settings_.x_max - settings_.x_min) * k / (n - 1);
  std::size_t k = 0;
  Point best{tcut, xs[0], std::numeric_limits<double>::infinity(), 0, true};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Point p = worst_case(tcut, xs[i], best.error);
    if (!p.aborted && p.error < best.error) {
      best = p;
      k = i;
    }
  }
  // golden-section minimization in x; comparisons only need lower bounds of dominated points
  double a = xs[k == 0 ? 0 : k - 1], b = xs[k + 1 == xs.size() ? k : k + 1];
  double c = b - kGolden * (b - a), d = a + kGolden * (b - a);
  Point pc = worst_case(tcut, c, best.error), pd = worst_case(tcut, d, std::min(best.error, pc.error));
  for (int i = 0; i < kXIterations; ++i) {
    if (!pc.aborted && pc.error < best.error) best = pc;
    if (!pd.aborted && pd.error < best.error) best = pd;
    if (pc.error < pd.error) {
      b = d;
      d = c;
      pd = pc;
      c = b - kGolden * (b - a);
      pc = worst_case(tcut, c, std::min(best.error, pd.error));
    } else {
      a = c;
      c = d;
      pc = pd;
      d = a + kGolden * (b - a);
      pd = worst_case(tcut, d, std::min(best.error, pc.error));
    }
  }
  if (!pc.aborted && pc.error < best.error) best = pc;
  if (!pd.aborted && pd.error < best.error) best = pd;
  return best;
}

void PiPulseFrontier::extend_to(double tcut) {
  double next = scan_.empty() ? settings_.scan_step : scan_.back().tcut + settings_.scan_step;
  std::vector<double> todo;
  for (; next <= tcut + 1e-12; next += settings_.scan_step) todo.push_back(next);
  auto pts = parallel_map(todo.size(), [&](std::size_t i) { return best_at(todo[i]); });
  scan_.insert(scan_.end(), pts.begin(), pts.end());
}

PiPulseFrontier::Point PiPulseFrontier::minimal(double threshold) {
  if (!(threshold > 0 && threshold < 1)) throw InputError("optimizer: threshold must lie in (0, 1)");
  std::size_t i = 0;
  for (;; ++i) {
    if (i >= scan_.size()) {
      if (!scan_.empty() && scan_.back().tcut + settings_.scan_step > settings_.tcut_max + 1e-12) {
        std::ostringstream os;
        os << "optimizer: threshold " << threshold << " not reached for T_cut * delta_omega <= " << settings_.tcut_max;
        throw InfeasibleError(os.str());
      }
      extend_to((scan_.empty() ? 0.0 : scan_.back().tcut) + 10 * settings_.scan_step);
    }
    if (scan_[i].error <= threshold) break;
  }
  Point hi = scan_[i];
  if (i == 0) return hi;
  double lo = scan_[i - 1].tcut;
  // bisection on feasibility between the last infeasible and first feasible scan points
  while ((hi.tcut - lo) > settings_.rel_tol * hi.tcut) {
    double mid = 0.5 * (lo + hi.tcut);
    Point p = best_at(mid);
    if (p.error <= threshold)
      hi = p;
    else
      lo = mid;
  }
  return hi;
}

PulseOptimizationResult optimize_pi_pulse(double error_threshold, double delta_omega_min, PiPulseFrontier& frontier) {
  if (!(delta_omega_min > 0)) throw InputError("optimizer: delta_omega_min must be positive");
  auto p = frontier.minimal(error_threshold);
  PulseOptimizationResult r;
  r.T_cut = p.tcut / delta_omega_min;
  r.T_pi = 2 * r.T_cut;
  r.T = r.T_cut / p.x;
  r.omega0 = PulseSpec::pi_pulse(r.T, r.T_cut, 0).omega0;
  r.max_error = p.error;
  r.worst_detuning = p.worst_detuning * delta_omega_min;
  for (double d : frontier.settings().grid.points) r.detuning_grid.push_back(d * delta_omega_min);
  return r;
}

PulseOptimizationResult optimize_pi_pulse(double error_threshold, double delta_omega_min,
                                          const OptimizerSettings& settings) {
  PiPulseFrontier f(settings);
  return optimize_pi_pulse(error_threshold, delta_omega_min, f);
}

}  // namespace renq
