#pragma once

#include <functional>

#include "renq/core/matrix.hpp"

namespace renq {

// Callbacks return H/hbar in rad/s.
using HamiltonianFn = std::function<ComplexMatrix(double t)>;

// Piecewise-constant propagation with H sampled at step midpoints.
// Uses ceil((t1 - t0) / dt_max) steps of equal length.
ComplexMatrix propagate(const HamiltonianFn& h, double t0, double t1, double dt_max);

// dt_max so that ||H|| dt_max <= phase_per_step for a Hamiltonian bounded by h_norm (rad/s).
double default_dt_max(double h_norm, double phase_per_step = 0.05);

}  // namespace renq
