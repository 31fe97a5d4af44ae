#include "renq/core/expm.hpp"

#include <cmath>

namespace renq {

ComplexMatrix expm(const ComplexMatrix& a) {
  require_square(a, "expm");
  const Eigen::Index n = a.rows();
  // 1-norm
  double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  ComplexMatrix x = a / std::ldexp(1.0, s);

  static constexpr double c[] = {1.0, 0.5, 5.0 / 44.0, 1.0 / 66.0, 1.0 / 792.0, 1.0 / 15840.0, 1.0 / 665280.0};
  ComplexMatrix id = ComplexMatrix::Identity(n, n);
  ComplexMatrix x2 = x * x;
  ComplexMatrix x4 = x2 * x2;
  ComplexMatrix x6 = x4 * x2;
  ComplexMatrix even = c[0] * id + c[2] * x2 + c[4] * x4 + c[6] * x6;
  ComplexMatrix odd = x * (c[1] * id + c[3] * x2 + c[5] * x4);
  ComplexMatrix r = (even - odd).partialPivLu().solve(even + odd);
  for (int k = 0; k < s; ++k) r = r * r;
  return r;
}

ComplexMatrix evolution_step(const ComplexMatrix& h, double dt) {
  return expm(complex(0, -dt) * h);
}

}  // namespace renq
