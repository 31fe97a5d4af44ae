#pragma once

#include "renq/core/matrix.hpp"

namespace renq {

struct SpinOps {
  ComplexMatrix x, y, z;
};

// |j,m> basis ordered m = j ... -j. j must be a non-negative half-integer.
SpinOps angular_momentum_ops(double j);

// Left factor is the slow index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// true if 2j is a non-negative integer
bool is_half_integer(double j);
// true if 2j is an odd integer
bool is_kramers(double j);
int spin_dim(double j);

}  // namespace renq
