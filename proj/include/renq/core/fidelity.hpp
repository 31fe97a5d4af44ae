#pragma once

#include <vector>

#include "renq/core/matrix.hpp"

namespace renq {

// min over pure states of |<psi| U_ideal^dagger U_exp |psi>|^2, via the distance from
// the origin to the convex hull of the eigenvalues of U_ideal^dagger U_exp.
double min_gate_fidelity(const ComplexMatrix& u_ideal, const ComplexMatrix& u_exp);

// Squared distance from 0 to the convex hull of points on the unit circle, given by phase.
double hull_distance_sq(std::vector<double> phases);

}  // namespace renq
