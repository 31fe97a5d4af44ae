#pragma once

namespace renq {

// Wigner small-d matrix element d^j_{m' m}(beta).
double wigner_small_d(double j, double m_prime, double m, double beta);

}  // namespace renq
