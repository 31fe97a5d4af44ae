#pragma once

#include <array>
#include <string>

#include "renq/core/matrix.hpp"
#include "renq/ion/gtensor.hpp"

namespace renq {

enum class Manifold { ground, excited };

struct IonSpec {
  double J_ground = 7.5;
  double J_excited = 6.5;
  double I = 3.5;
  double A_J_ground = 0;   // Hz
  double A_J_excited = 0;  // Hz
  GTensor g_ground;
  GTensor g_excited;
  double g_J_ground = 1.2;   // Lande factor of the manifold
  double g_J_excited = 1.2;
  double g_N = 0;
  double delta_J = 0;          // Hz
  double delta_CF = 0;         // Hz
  double mu_e_transition = 0;  // C m
  double T2_excited = 0;       // s

  double J(Manifold m) const { return m == Manifold::ground ? J_ground : J_excited; }
  double A_J(Manifold m) const { return m == Manifold::ground ? A_J_ground : A_J_excited; }
  const GTensor& g(Manifold m) const { return m == Manifold::ground ? g_ground : g_excited; }
  double g_J(Manifold m) const { return m == Manifold::ground ? g_J_ground : g_J_excited; }

  // throws InputError / ModelError describing the first violated invariant
  void validate() const;
  bool operator==(const IonSpec&) const = default;
};

struct FieldSpec {
  double magnitude = 0;  // T
  double theta = 0;      // rad, polar
  double phi = 0;        // rad, azimuthal

  FieldSpec() = default;
  FieldSpec(double b, double th, double ph);

  Vec3 direction() const;
  Vec3 vector() const { return magnitude * direction(); }
};

struct DipolePair {
  IonSpec ion1;
  IonSpec ion2;
  Vec3 r12 = Vec3::Zero();  // m

  DipolePair() = default;
  DipolePair(IonSpec a, IonSpec b, Vec3 r);
};

enum class EncodingKind { electro_nuclear, electronic };

// Lower/upper member of a Zeeman-split doublet and the nuclear projection m along the
// doublet's polarization axis, oriented so that m = -I is lowest in the lower branch.
struct LevelRef {
  int branch = 0;  // 0 lower, 1 upper
  double m = 0;
  bool operator==(const LevelRef&) const = default;
};

struct QubitEncoding {
  EncodingKind kind = EncodingKind::electro_nuclear;
  std::array<LevelRef, 2> passive;
  std::array<LevelRef, 2> active;

  // Passive {-I, -I+1} in the lower ground branch. Active in the excited doublet: lower -I
  // and upper -I+1 (electro-nuclear) or lower -I and upper -I (electronic).
  static QubitEncoding standard(EncodingKind kind, double I);
  void validate(double I) const;
};

}  // namespace renq
