#pragma once

#include "renq/core/matrix.hpp"

namespace renq {

// Pade(6,6) with scaling and squaring.
ComplexMatrix expm(const ComplexMatrix& a);

// exp(-i h dt) for Hermitian h (angular-frequency units).
ComplexMatrix evolution_step(const ComplexMatrix& h, double dt);

}  // namespace renq
