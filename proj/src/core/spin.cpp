#include "renq/core/spin.hpp"

#include <cmath>
#include <string>

#include "renq/core/errors.hpp"

namespace renq {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::input: return "input";
    case ErrorKind::model: return "model";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::parse: return "parse";
    case ErrorKind::regime: return "regime";
    case ErrorKind::degenerate_encoding: return "degenerate_encoding";
  }
  return "unknown";
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw InputError(std::string(what) + ": matrix must be square with dim >= 1");
}

double hermiticity_defect(const ComplexMatrix& m) {
  double scale = m.cwiseAbs().maxCoeff();
  double d = (m - m.adjoint()).cwiseAbs().maxCoeff();
  return scale > 0 ? d / scale : d;
}

double unitarity_defect(const ComplexMatrix& m) {
  return (m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, complex(0, -1), complex(0, 1), 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

bool is_half_integer(double j) {
  double twice = 2.0 * j;
  return j >= 0 && std::abs(twice - std::round(twice)) < 1e-12;
}

bool is_kramers(double j) {
  return is_half_integer(j) && (static_cast<long>(std::lround(2.0 * j)) % 2 == 1);
}

int spin_dim(double j) {
  if (!is_half_integer(j)) throw InputError("spin quantum number must be a non-negative half-integer, got " + std::to_string(j));
  return static_cast<int>(std::lround(2.0 * j)) + 1;
}

SpinOps angular_momentum_ops(double j) {
  const int n = spin_dim(j);
  SpinOps s{ComplexMatrix::Zero(n, n), ComplexMatrix::Zero(n, n), ComplexMatrix::Zero(n, n)};
  // index k <-> m = j - k
  for (int k = 0; k < n; ++k) {
    double m = j - k;
    s.z(k, k) = m;
    if (k + 1 < n) {
      // <m|J+|m-1> = sqrt(j(j+1) - m(m-1))
      double jp = std::sqrt(j * (j + 1) - m * (m - 1));
      s.x(k, k + 1) = 0.5 * jp;
      s.x(k + 1, k) = 0.5 * jp;
      s.y(k, k + 1) = complex(0, -0.5 * jp);
      s.y(k + 1, k) = complex(0, 0.5 * jp);
    }
  }
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace renq
