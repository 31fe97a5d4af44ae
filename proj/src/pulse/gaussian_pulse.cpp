#include "renq/pulse/gaussian_pulse.hpp"

#include <cmath>

#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"
#include "renq/core/fidelity.hpp"

namespace renq {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

struct Su2 {
  complex a{1, 0};  // U = [[a, -conj(b)], [b, conj(a)]]
  complex b{0, 0};
};

// erf(b) - erf(a) without cancellation in the tails
double erf_diff(double a, double b) {
  if (a >= 0) return std::erfc(a) - std::erfc(b);
  if (b <= 0) return std::erfc(-b) - std::erfc(-a);
  return std::erf(b) - std::erf(a);
}

// Each step uses the exact mean of the envelope over the step, so the areas telescope
// and a resonant pulse rotates by exactly its total area.
Su2 evolve(const PulseSpec& p, double phase_per_step) {
  const double hmax = 0.5 * std::sqrt(p.detuning * p.detuning + p.omega0 * p.omega0);
  long steps = static_cast<long>(std::ceil(2 * p.T_cut * hmax / phase_per_step));
  steps = std::max(steps, 16L);
  const double dt = 2 * p.T_cut / static_cast<double>(steps);
  const double hz = 0.5 * p.detuning;
  const double mean_scale = 0.5 * p.omega0 * p.T * 0.5 * kSqrtPi / dt;
  Su2 u;
  for (long k = 0; k < steps; ++k) {
    const double t0 = -p.T_cut + static_cast<double>(k) * dt;
    const double t1 = k + 1 == steps ? p.T_cut : t0 + dt;
    const double hx = mean_scale * erf_diff(t0 / p.T, t1 / p.T);
    const double w = std::sqrt(hz * hz + hx * hx);
    const double c = std::cos(w * dt);
    const double s = w > 0 ? std::sin(w * dt) / w : dt;
    const complex sa(c, -s * hz);
    const complex sb(0, -s * hx);
    const complex na = sa * u.a - std::conj(sb) * u.b;
    const complex nb = sb * u.a + std::conj(sa) * u.b;
    u.a = na;
    u.b = nb;
  }
  return u;
}

}  // namespace

PulseSpec::PulseSpec(double o, double t, double tc, double d) : omega0(o), T(t), T_cut(tc), detuning(d) {
  if (!(omega0 > 0) || !(T > 0) || !(T_cut > 0)) throw InputError("pulse: omega0, T and T_cut must be positive");
}

double PulseSpec::envelope(double t) const {
  if (std::abs(t) > T_cut) return 0.0;
  const double z = t / T;
  return omega0 * std::exp(-z * z);
}

PulseSpec PulseSpec::pi_pulse(double T, double T_cut, double detuning) {
  if (!(T > 0) || !(T_cut > 0)) throw InputError("pulse: T and T_cut must be positive");
  return PulseSpec(kSqrtPi / (T * std::erf(T_cut / T)), T, T_cut, detuning);
}

ComplexMatrix rwa_hamiltonian(const PulseSpec& pulse, double t) {
  ComplexMatrix h(2, 2);
  const double om = pulse.envelope(t);
  h << 0.5 * pulse.detuning, 0.5 * om, 0.5 * om, -0.5 * pulse.detuning;
  return h;
}

double solve_pi_width(double omega0, double T_cut) {
  if (!(omega0 > 0) || !(T_cut > 0)) throw InputError("solve_pi_width: omega0 and T_cut must be positive");
  const double a = omega0 * T_cut;
  if (!(a > 0.5 * constants::pi))
    throw InfeasibleError("solve_pi_width: omega0 * T_cut must exceed pi/2 for a pi area");
  // area(z) = sqrt(pi) a erf(z)/z, z = T_cut/T, decreasing from 2a at z = 0
  auto f = [a](double z) { return kSqrtPi * a * std::erf(z) / z - constants::pi; };
  double lo = 1e-300, hi = 1.0;
  while (f(hi) > 0) hi *= 2;
  lo = std::max(lo, hi * 0.5);
  if (f(lo) < 0) lo = 1e-300;
  // bisection in log z
  for (int it = 0; it < 400 && hi / lo - 1 > 1e-15; ++it) {
    double mid = std::sqrt(lo * hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0 ? lo : hi) = mid;
  }
  const double z = 0.5 * (lo + hi);
  return T_cut / z;
}

ComplexMatrix pulse_propagator(const PulseSpec& pulse, double phase_per_step) {
  Su2 u = evolve(pulse, phase_per_step);
  ComplexMatrix m(2, 2);
  m << u.a, -std::conj(u.b), u.b, std::conj(u.a);
  return m;
}

double flip_probability(const PulseSpec& pulse, double phase_per_step) {
  return std::norm(evolve(pulse, phase_per_step).b);
}

double pulse_error_exact(const PulseSpec& pulse, PulseTarget target, double phase_per_step) {
  if (target == PulseTarget::automatic) target = pulse.detuning == 0 ? PulseTarget::flip : PulseTarget::idle;
  const ComplexMatrix u = pulse_propagator(pulse, phase_per_step);
  ComplexMatrix m = target == PulseTarget::flip ? ComplexMatrix(pauli_x() * u) : u;
  for (int k = 0; k < 2; ++k) {
    const double r = std::abs(m(k, k));
    if (r > 0) m.row(k) *= std::conj(m(k, k)) / r;
  }
  return 1.0 - min_gate_fidelity(identity(2), m);
}

double pulse_error_first_order_xy(double x, double y) {
  const double pre = constants::pi / (2 * std::erf(x));
  const double osc = std::exp(-x * x) * (x * std::cos(2 * x * y) - y * std::sin(2 * x * y)) / (kSqrtPi * (x * x + y * y));
  const double amp = pre * (std::exp(-y * y) - osc);
  return amp * amp;
}

double pulse_error_first_order(const PulseSpec& pulse) {
  return pulse_error_first_order_xy(pulse.T_cut / pulse.T, 0.5 * std::abs(pulse.detuning) * pulse.T);
}

}  // namespace renq
