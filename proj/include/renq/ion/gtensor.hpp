#pragma once

#include "renq/core/matrix.hpp"

namespace renq {

// g-matrix of a Kramers doublet: H = (mu_B/2) B_a g_ab sigma_b.
class GTensor {
 public:
  GTensor() : g_(Mat3::Zero()) {}
  explicit GTensor(const Mat3& g) : g_(g) {}

  // g_perp * 1 + (g_par - g_perp) n n^T; axis is normalized internally
  static GTensor axial(double g_par, double g_perp, const Vec3& axis = Vec3::UnitZ());
  static GTensor isotropic(double g);

  const Mat3& matrix() const { return g_; }

  // g^T b: pseudospin field direction (unnormalized)
  Vec3 pseudospin_field(const Vec3& b) const { return g_.transpose() * b; }

  struct Principal {
    Vec3 values;  // singular values, descending
    Mat3 left;    // columns: lab-frame axes
    Mat3 right;   // columns: pseudospin-frame axes
  };
  Principal principal() const;
  Mat3 reconstruct() const;

  // Axial parameters for tensors with a distinguished principal axis
  // (the singular value farthest from the mean of the other two).
  struct Axial {
    double g_par;
    double g_perp;
    Vec3 axis;
  };
  Axial axial_form() const;

  bool operator==(const GTensor& o) const { return g_ == o.g_; }

 private:
  Mat3 g_;
};

}  // namespace renq
