#include "renq/gates/cnot.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"
#include "renq/core/expm.hpp"
#include "renq/core/fidelity.hpp"
#include "renq/core/spin.hpp"

namespace renq {

namespace {

ComplexMatrix pauli(Axis a) {
  switch (a) {
    case Axis::x: return pauli_x();
    case Axis::y: return pauli_y();
    case Axis::z: return pauli_z();
  }
  return pauli_z();
}

ComplexMatrix on_qubit(const ComplexMatrix& op, int which) {
  return which == 0 ? kron(op, identity(2)) : kron(identity(2), op);
}

}  // namespace

ComplexMatrix sqrt_gate(Axis axis, int which) {
  const ComplexMatrix s = pauli(axis);
  const double c = std::cos(constants::pi / 4), si = std::sin(constants::pi / 4);
  ComplexMatrix one = c * identity(2) - complex(0, si) * s;
  return on_qubit(one, which);
}

ComplexMatrix cphase_half() {
  const ComplexMatrix zz = kron(pauli_z(), pauli_z());
  return expm(complex(0, -constants::pi / 4) * zz);
}

ComplexMatrix cnot_canonical() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = 1;
  m(2, 3) = m(3, 2) = 1;
  return m;
}

ComplexMatrix cnot_ideal() {
  ComplexMatrix u = sqrt_gate(Axis::z, 0) * sqrt_gate(Axis::z, 1).adjoint() * sqrt_gate(Axis::x, 1) * cphase_half() *
                    sqrt_gate(Axis::y, 1);
  if (1.0 - min_gate_fidelity(cnot_canonical(), u) > 1e-12)
    throw ModelError("cnot_ideal: decomposition does not reproduce CNOT");
  return u;
}

double cnot_time(double j_dip_hz) {
  if (j_dip_hz == 0 || !std::isfinite(j_dip_hz)) throw InfeasibleError("t_CNOT: vanishing Ising coupling");
  return constants::pi * constants::hbar / (4 * constants::h * std::abs(j_dip_hz));
}

ComplexMatrix spin_echo_cphase(const ComplexMatrix& h_full, double j_dip_hz, double x_gate_duration) {
  if (h_full.rows() != 4 || h_full.cols() != 4) throw InputError("spin_echo_cphase: two-qubit Hamiltonian required");
  if (x_gate_duration < 0) throw InputError("spin_echo_cphase: negative X-gate duration");
  const double t = cnot_time(j_dip_hz);
  const ComplexMatrix h = 2 * constants::pi * h_full;  // rad/s
  const ComplexMatrix half = evolution_step(h, 0.5 * t);
  ComplexMatrix xx;
  if (x_gate_duration == 0) {
    xx = kron(pauli_x(), pauli_x());
  } else {
    const ComplexMatrix drive = (constants::pi / (2 * x_gate_duration)) * (on_qubit(pauli_x(), 0) + on_qubit(pauli_x(), 1));
    xx = evolution_step(h + drive, x_gate_duration);
  }
  return xx * half * xx * half;
}

double entanglement_entropy(const Eigen::VectorXcd& psi) {
  if (psi.size() != 4) throw InputError("entanglement_entropy: two-qubit state required");
  Eigen::Matrix2cd m;
  m << psi(0), psi(1), psi(2), psi(3);
  Eigen::Matrix2cd rho = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho);
  double s = 0;
  for (int i = 0; i < 2; ++i) {
    double p = es.eigenvalues()(i);
    if (p > 1e-300) s -= p * std::log(p);
  }
  return s;
}

}  // namespace renq
