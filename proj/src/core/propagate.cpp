#include "renq/core/propagate.hpp"

#include <cmath>
#include <string>

#include "renq/core/errors.hpp"
#include "renq/core/expm.hpp"

namespace renq {

namespace {
constexpr double kHermitianTol = 1e-12;
}

ComplexMatrix propagate(const HamiltonianFn& h, double t0, double t1, double dt_max) {
  if (!(t1 > t0)) throw InputError("propagate: t1 must exceed t0");
  if (!(dt_max > 0)) throw InputError("propagate: dt_max must be positive");
  const long steps = static_cast<long>(std::ceil((t1 - t0) / dt_max - 1e-12));
  const double dt = (t1 - t0) / static_cast<double>(steps);
  ComplexMatrix u;
  for (long k = 0; k < steps; ++k) {
    ComplexMatrix hk = h(t0 + (static_cast<double>(k) + 0.5) * dt);
    require_square(hk, "propagate callback");
    if (k == 0) {
      u = identity(hk.rows());
    } else if (hk.rows() != u.rows()) {
      throw ModelError("propagate: Hamiltonian dimension changed during evolution");
    }
    if (hermiticity_defect(hk) > kHermitianTol)
      throw ModelError("propagate: Hamiltonian is not Hermitian at t = " + std::to_string(t0 + (k + 0.5) * dt));
    u = evolution_step(hk, dt) * u;
  }
  return u;
}

double default_dt_max(double h_norm, double phase_per_step) {
  if (h_norm <= 0) return 1.0;
  return phase_per_step / h_norm;
}

}  // namespace renq
