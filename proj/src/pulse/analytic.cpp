#include "renq/pulse/analytic.hpp"

#include <cmath>
#include <limits>

#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"

namespace renq {

namespace {

constexpr int kUSamples = 600;
constexpr double kUSpan = 2 * constants::pi + 12.0;
constexpr int kPSamples = 240;

// max over u >= 0 of |p e^{-u} - (q/p) k cos(theta + u + pi/4)|, q = e^{-2s}
double worst(double p, double s, double theta) {
  const double k = std::sqrt(2.0) / (2 * std::sqrt(constants::pi));
  const double amp = std::exp(-2 * s) / p * k;
  double m = 0;
  for (int i = 0; i < kUSamples; ++i) {
    double u = kUSpan * i / (kUSamples - 1);
    m = std::max(m, std::abs(p * std::exp(-u) - amp * std::cos(theta + u + 0.25 * constants::pi)));
  }
  return m;
}

// best p at fixed s; returns the constraint value and the argument
double best_p(double s, double theta, double& p_out) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kPSamples; ++i) {
    double lp = -6.0 + 12.0 * i / (kPSamples - 1);
    double p = std::exp(lp);
    double v = worst(p, s, theta);
    if (v < best) {
      best = v;
      p_out = p;
    }
  }
  return best;
}

}  // namespace

AnalyticGateTime analytic_gate_time(double eps) {
  if (!(eps > 0 && eps < 1)) throw InputError("analytic_gate_time: threshold must lie in (0, 1)");
  const double L = std::log(1 / eps);
  const double leading = 2 * L - std::log(L / 2);
  const double bound = 2 / constants::pi;
  auto theta = [&](double s) { return L - 0.5 * std::log(L / 2) + 2 * s; };
  auto feasible = [&](double s, double& p) { return best_p(s, theta(s), p) <= bound; };

  double p = 1;
  double s_prev = -4.0;
  double s = s_prev;
  const double step = 0.1;
  for (; s <= 6.0; s += step) {
    if (feasible(s, p)) break;
    s_prev = s;
  }
  if (s > 6.0) throw InfeasibleError("analytic_gate_time: constraint not satisfiable");
  double lo = s_prev, hi = s;
  for (int i = 0; i < 30; ++i) {
    double mid = 0.5 * (lo + hi), pm = p;
    if (feasible(mid, pm)) {
      hi = mid;
      p = pm;
    } else {
      lo = mid;
    }
  }
  const double beta = -0.5 * std::log(p);
  return {leading + 4 * hi, hi - beta, beta, leading};
}

}  // namespace renq
