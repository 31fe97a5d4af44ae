#pragma once

#include "renq/core/matrix.hpp"

namespace renq {

enum class Axis { x, y, z };

// exp(-i pi/4 sigma_axis) on qubit `which` (0 = control, slow index) of two qubits
ComplexMatrix sqrt_gate(Axis axis, int which);
// C(pi/2) = exp(-i pi/4 sigma_z sigma_z)
ComplexMatrix cphase_half();
ComplexMatrix cnot_canonical();
// sqrtZ_1 sqrtZ_2^dagger sqrtX_2 C(pi/2) sqrtY_2; checked against the canonical CNOT
ComplexMatrix cnot_ideal();

// t_CNOT = pi hbar / (4 J_dip) for J_dip/h in Hz
double cnot_time(double j_dip_hz);

// X1X2 exp(-i H t/2hbar) X2X1 exp(-i H t/2hbar) with t = t_CNOT; h_full in Hz on two qubits.
// x_gate_duration > 0 replaces each X1X2 by a resonant drive of that length acting
// together with h_full.
ComplexMatrix spin_echo_cphase(const ComplexMatrix& h_full, double j_dip_hz, double x_gate_duration = 0.0);

// von Neumann entropy (nats) of qubit 0 for a two-qubit pure state
double entanglement_entropy(const Eigen::VectorXcd& psi);

}  // namespace renq
