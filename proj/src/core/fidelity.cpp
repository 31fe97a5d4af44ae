#include "renq/core/fidelity.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"

namespace renq {

namespace {
constexpr double kUnitaryTol = 1e-6;
}

double hull_distance_sq(std::vector<double> phases) {
  if (phases.empty()) return 0.0;
  const double two_pi = 2.0 * constants::pi;
  for (auto& p : phases) {
    p = std::fmod(p, two_pi);
    if (p < 0) p += two_pi;
  }
  std::sort(phases.begin(), phases.end());
  double max_gap = two_pi - (phases.back() - phases.front());
  for (std::size_t i = 1; i < phases.size(); ++i) max_gap = std::max(max_gap, phases[i] - phases[i - 1]);
  // points lie on an arc of length 2pi - max_gap; nearest hull point is that arc's chord
  double arc = two_pi - max_gap;
  if (arc >= constants::pi) return 0.0;
  double d = std::cos(0.5 * arc);
  return d * d;
}

double min_gate_fidelity(const ComplexMatrix& u_ideal, const ComplexMatrix& u_exp) {
  require_square(u_ideal, "min_gate_fidelity");
  require_square(u_exp, "min_gate_fidelity");
  if (u_ideal.rows() != u_exp.rows()) throw InputError("min_gate_fidelity: dimension mismatch");
  if (unitarity_defect(u_ideal) > kUnitaryTol || unitarity_defect(u_exp) > kUnitaryTol)
    throw InputError("min_gate_fidelity: arguments must be unitary");
  ComplexMatrix m = u_ideal.adjoint() * u_exp;
  Eigen::ComplexEigenSolver<ComplexMatrix> es(m, false);
  std::vector<double> phases;
  phases.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) phases.push_back(std::arg(es.eigenvalues()(i)));
  return std::clamp(hull_distance_sq(std::move(phases)), 0.0, 1.0);
}

}  // namespace renq
