#include "renq/ion/gtensor.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "renq/core/errors.hpp"

namespace renq {

GTensor GTensor::axial(double g_par, double g_perp, const Vec3& axis) {
  double n = axis.norm();
  if (!(n > 0)) throw InputError("GTensor::axial: principal axis must be nonzero");
  Vec3 a = axis / n;
  return GTensor(g_perp * Mat3::Identity() + (g_par - g_perp) * a * a.transpose());
}

GTensor GTensor::isotropic(double g) { return GTensor(g * Mat3::Identity()); }

GTensor::Principal GTensor::principal() const {
  Eigen::JacobiSVD<Mat3> svd(g_, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {svd.singularValues(), svd.matrixU(), svd.matrixV()};
}

Mat3 GTensor::reconstruct() const {
  auto p = principal();
  return p.left * p.values.asDiagonal() * p.right.transpose();
}

GTensor::Axial GTensor::axial_form() const {
  auto p = principal();
  // the singular value most separated from the other two defines the axis
  double d0 = std::abs(p.values(0) - 0.5 * (p.values(1) + p.values(2)));
  double d2 = std::abs(p.values(2) - 0.5 * (p.values(0) + p.values(1)));
  if (d0 >= d2) return {p.values(0), 0.5 * (p.values(1) + p.values(2)), p.left.col(0)};
  return {p.values(2), 0.5 * (p.values(0) + p.values(1)), p.left.col(2)};
}

}  // namespace renq
