#include "renq/ion/wigner.hpp"

#include <algorithm>
#include <cmath>

#include "renq/core/errors.hpp"
#include "renq/core/spin.hpp"

namespace renq {

namespace {
double fact(long n) { return std::tgamma(static_cast<double>(n) + 1.0); }
long as_int(double x) { return std::lround(x); }
}  // namespace

double wigner_small_d(double j, double mp, double m, double beta) {
  if (!is_half_integer(j) || std::abs(m) > j + 1e-12 || std::abs(mp) > j + 1e-12 || !is_half_integer(j + m) ||
      !is_half_integer(j + mp) || std::abs(std::round(j + m) - (j + m)) > 1e-12 ||
      std::abs(std::round(j + mp) - (j + mp)) > 1e-12)
    throw InputError("wigner_small_d: invalid quantum numbers");
  const long jpm = as_int(j + m), jmm = as_int(j - m), jpmp = as_int(j + mp), jmmp = as_int(j - mp);
  const long dm = as_int(mp - m);
  const double c = std::cos(0.5 * beta), s = std::sin(0.5 * beta);
  double sum = 0;
  for (long k = std::max(0L, -dm); k <= std::min(jpm, jmmp); ++k) {
    double term = fact(jpm - k) * fact(k) * fact(jmmp - k) * fact(k + dm);
    double sign = ((k + dm) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * std::pow(c, static_cast<double>(jpm + jmmp - 2 * k)) * std::pow(s, static_cast<double>(2 * k + dm)) / term;
  }
  return sum * std::sqrt(fact(jpmp) * fact(jmmp) * fact(jpm) * fact(jmm));
}

}  // namespace renq
