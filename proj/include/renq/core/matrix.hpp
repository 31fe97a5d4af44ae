#pragma once

#include <Eigen/Dense>
#include <complex>

namespace renq {

using complex = std::complex<double>;
// Dense square complex matrix. Squareness is checked where it matters
// (require_square) rather than encoded in the type, so Eigen expressions
// compose without conversions.
using ComplexMatrix = Eigen::MatrixXcd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

void require_square(const ComplexMatrix& m, const char* what);

// max |H - H^dagger| relative to max |H| (absolute when H == 0)
double hermiticity_defect(const ComplexMatrix& m);
// max |U^dagger U - 1|
double unitarity_defect(const ComplexMatrix& m);

ComplexMatrix identity(Eigen::Index n);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace renq
