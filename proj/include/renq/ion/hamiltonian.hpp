#pragma once

#include <array>
#include <string>
#include <vector>

#include "renq/core/matrix.hpp"
#include "renq/ion/ion_spec.hpp"

namespace renq {

// Doublet pseudospin (x) nuclear spin, in Hz (E/h). Electronic index is slow.
ComplexMatrix single_ion_hamiltonian(const IonSpec& ion, Manifold manifold, const FieldSpec& field);

struct Level {
  double energy;  // Hz
  int branch;     // 0 lower, 1 upper Zeeman branch
  double m;       // nuclear projection along the doublet polarization axis
  Eigen::VectorXcd state;
};

// Eigenlevels sorted by energy, labelled by <sigma_u> and <I_n>.
std::vector<Level> classify_levels(const IonSpec& ion, Manifold manifold, const FieldSpec& field);
int level_index(const std::vector<Level>& levels, const LevelRef& ref);

// (mu_B/2) |g^T b|, J/T
double effective_moment(const GTensor& g, const Vec3& field_direction);
// unit vector along g (g^T b)
Vec3 moment_direction(const GTensor& g, const Vec3& field_direction);
// unit vector g^T b / |g^T b|
Vec3 pseudospin_axis(const GTensor& g, const Vec3& field_direction);
// Nuclear quantization axis of the lower branch: along the hyperfine field g (g^T b),
// oriented so that m = -I is the lowest lower-branch level.
Vec3 nuclear_axis(const IonSpec& ion, Manifold manifold, const Vec3& field_direction);
// angle between ground and excited nuclear quantization axes
double nuclear_axis_angle(const IonSpec& ion, const Vec3& field_direction);
// |<m_excited | m_ground>| between nuclear states quantized on the two axes
double nuclear_overlap(const IonSpec& ion, const Vec3& field_direction, double m_ground, double m_excited);

// mu0 (mu_B g_J)^2 / (4 pi r^3 h) (1 - 3 r r), Hz
Mat3 dipolar_coupling_tensor(const DipolePair& pair);
// mu0 / (4 pi r^3) (1 - 3 r r); m1^T K m2 is the interaction energy in J for moments in J/T
Mat3 dipolar_kernel(const Vec3& r12);
// Delta mu^2 / (4 pi eps0 r^3 hbar), rad/s
double electric_dipolar_shift(double delta_mu, double r);

// J_dip/h in Hz: coefficient of sigma_z sigma_z between the two excited-doublet pseudospins.
double ising_projection(const DipolePair& pair, const GTensor& g_excited, const FieldSpec& field);

// Both ions in their excited-doublet model space; dimension (2(2I+1))^2. Hz.
// The longitudinal moment is the field-projected mu_m along moment_direction; transverse
// components are the exact g v, g w for the pseudospin frame (u, v, w).
ComplexMatrix two_ion_hamiltonian(const DipolePair& pair, const FieldSpec& field, const QubitEncoding& encoding);
// Interaction part only.
ComplexMatrix two_ion_interaction(const DipolePair& pair, const FieldSpec& field);

// Pseudospin moment operators (J/T) for one doublet: mu_a = -(mu_B/2) * M_ab sigma'_b
std::array<ComplexMatrix, 3> moment_operators(const GTensor& g, const Vec3& field_direction);
// Product state |branch> (x) |m>, the zeroth-order level in the hyperfine-dressed spectrum.
Eigen::VectorXcd bare_state(const IonSpec& ion, Manifold manifold, const Vec3& field_direction, const LevelRef& ref);

struct HierarchyCheck {
  double J_dip;      // Hz
  double A_J;        // Hz
  double zeeman;     // mu_B B / h, Hz
  double delta_CF;   // Hz
  bool dipolar_below_hyperfine;
  bool hyperfine_below_zeeman;
  bool zeeman_below_crystal_field;
  bool ok() const { return dipolar_below_hyperfine && hyperfine_below_zeeman && zeeman_below_crystal_field; }
  std::string describe() const;
};

HierarchyCheck check_hierarchy(double J_dip, double A_J, double B, double delta_CF);
// throws RegimeError naming the first violated inequality
void require_hierarchy(const HierarchyCheck& check);

}  // namespace renq
