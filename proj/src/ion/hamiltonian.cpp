#include "renq/ion/hamiltonian.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"
#include "renq/core/spin.hpp"
#include "renq/ion/wigner.hpp"

namespace renq {

namespace {

constexpr double kZeroMoment = 1e-12;

std::array<ComplexMatrix, 3> paulis() { return {pauli_x(), pauli_y(), pauli_z()}; }

ComplexMatrix along(const std::array<ComplexMatrix, 3>& ops, const Vec3& n) {
  return n(0) * ops[0] + n(1) * ops[1] + n(2) * ops[2];
}

std::array<ComplexMatrix, 3> spin_array(double j) {
  auto s = angular_momentum_ops(j);
  return {s.x, s.y, s.z};
}

// unit vectors completing u to a right-handed frame
std::pair<Vec3, Vec3> complement(const Vec3& u) {
  Vec3 seed = std::abs(u.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  Vec3 v = (seed - seed.dot(u) * u).normalized();
  return {v, u.cross(v)};
}

Eigen::VectorXcd eigvec_along(const std::array<ComplexMatrix, 3>& ops, const Vec3& n, double j, double m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(along(ops, n));
  long k = std::lround(m + j);  // eigenvalues ascend from -j
  return es.eigenvectors().col(k);
}

}  // namespace

ComplexMatrix single_ion_hamiltonian(const IonSpec& ion, Manifold manifold, const FieldSpec& field) {
  if (!is_kramers(ion.J(manifold))) throw ModelError("single_ion_hamiltonian: integer J has no Kramers doublet");
  const auto s = paulis();
  const auto nuc = spin_array(ion.I);
  const int dn = spin_dim(ion.I);
  const Mat3& g = ion.g(manifold).matrix();
  const Vec3 b = field.vector();
  const ComplexMatrix one_n = identity(dn);
  const ComplexMatrix one_e = identity(2);

  const Vec3 zeeman = (constants::mu_B / (2 * constants::h)) * g.transpose() * b;
  ComplexMatrix h = kron(along(s, zeeman), one_n);
  const Vec3 nz = (-ion.g_N * constants::mu_N / constants::h) * b;
  h += kron(one_e, along(nuc, nz));
  // scaled contact: (A/g_J) sum_a (g sigma/2)_a I_a
  const double a = ion.A_J(manifold) / ion.g_J(manifold);
  if (a != 0) {
    for (int al = 0; al < 3; ++al) {
      ComplexMatrix gs = ComplexMatrix::Zero(2, 2);
      for (int be = 0; be < 3; ++be) gs += g(al, be) * s[be];
      h += (0.5 * a) * kron(gs, nuc[al]);
    }
  }
  return 0.5 * (h + h.adjoint());
}

std::vector<Level> classify_levels(const IonSpec& ion, Manifold manifold, const FieldSpec& field) {
  const Vec3 b = field.direction();
  const Vec3 u = pseudospin_axis(ion.g(manifold), b);
  const Vec3 n = nuclear_axis(ion, manifold, b);
  const auto nuc = spin_array(ion.I);
  const ComplexMatrix su = kron(along(paulis(), u), identity(spin_dim(ion.I)));
  const ComplexMatrix in = kron(identity(2), along(nuc, n));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(single_ion_hamiltonian(ion, manifold, field));
  std::vector<Level> out;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    Eigen::VectorXcd v = es.eigenvectors().col(k);
    double sz = v.dot(su * v).real();
    double m = v.dot(in * v).real();
    out.push_back({es.eigenvalues()(k), sz < 0 ? 0 : 1, std::round(2 * m) / 2, v});
  }
  return out;
}

int level_index(const std::vector<Level>& levels, const LevelRef& ref) {
  for (std::size_t k = 0; k < levels.size(); ++k)
    if (levels[k].branch == ref.branch && std::abs(levels[k].m - ref.m) < 1e-9) return static_cast<int>(k);
  throw ModelError("level_index: no level with the requested branch and nuclear projection");
}

double effective_moment(const GTensor& g, const Vec3& field_direction) {
  return 0.5 * constants::mu_B * g.pseudospin_field(field_direction.normalized()).norm();
}

Vec3 pseudospin_axis(const GTensor& g, const Vec3& field_direction) {
  Vec3 u = g.pseudospin_field(field_direction.normalized());
  if (u.norm() < kZeroMoment) throw DegenerateEncodingError("pseudospin axis undefined: g^T b = 0");
  return u.normalized();
}

Vec3 moment_direction(const GTensor& g, const Vec3& field_direction) {
  Vec3 m = g.matrix() * pseudospin_axis(g, field_direction);
  if (m.norm() < kZeroMoment) throw DegenerateEncodingError("moment direction undefined: g u = 0");
  return m.normalized();
}

Vec3 nuclear_axis(const IonSpec& ion, Manifold manifold, const Vec3& field_direction) {
  Vec3 gu = moment_direction(ion.g(manifold), field_direction);
  return ion.A_J(manifold) < 0 ? gu : Vec3(-gu);
}

double nuclear_axis_angle(const IonSpec& ion, const Vec3& field_direction) {
  Vec3 ng = nuclear_axis(ion, Manifold::ground, field_direction);
  Vec3 ne = nuclear_axis(ion, Manifold::excited, field_direction);
  return std::acos(std::clamp(ng.dot(ne), -1.0, 1.0));
}

double nuclear_overlap(const IonSpec& ion, const Vec3& field_direction, double m_ground, double m_excited) {
  return std::abs(wigner_small_d(ion.I, m_excited, m_ground, nuclear_axis_angle(ion, field_direction)));
}

Mat3 dipolar_kernel(const Vec3& r12) {
  const double r = r12.norm();
  if (!(r > 0)) throw InputError("dipolar coupling: zero separation");
  const Vec3 rh = r12 / r;
  return constants::mu_0 / (4 * constants::pi * r * r * r) * (Mat3::Identity() - 3 * rh * rh.transpose());
}

Mat3 dipolar_coupling_tensor(const DipolePair& pair) {
  const double m1 = constants::mu_B * pair.ion1.g_J_excited;
  const double m2 = constants::mu_B * pair.ion2.g_J_excited;
  return dipolar_kernel(pair.r12) * (m1 * m2 / constants::h);
}

double electric_dipolar_shift(double delta_mu, double r) {
  if (!(r > 0)) throw InputError("electric_dipolar_shift: zero separation");
  return delta_mu * delta_mu / (4 * constants::pi * constants::eps_0 * r * r * r * constants::hbar);
}

double ising_projection(const DipolePair& pair, const GTensor& g_excited, const FieldSpec& field) {
  const Vec3 b = field.direction();
  const double mu = effective_moment(g_excited, b);
  if (mu < kZeroMoment * constants::mu_B) throw DegenerateEncodingError("ising_projection: zero active moment");
  const Vec3 m = moment_direction(g_excited, b);
  return mu * mu * m.dot(dipolar_kernel(pair.r12) * m) / constants::h;
}

std::array<ComplexMatrix, 3> moment_operators(const GTensor& g, const Vec3& field_direction) {
  const Vec3 b = field_direction.normalized();
  const Vec3 u = pseudospin_axis(g, b);
  const auto [v, w] = complement(u);
  const Vec3 m = moment_direction(g, b);
  // longitudinal column replaced by the field-projected moment |g^T b| along m
  Mat3 coupling = g.pseudospin_field(b).norm() * m * u.transpose() + g.matrix() * v * v.transpose() +
                  g.matrix() * w * w.transpose();
  const auto s = paulis();
  std::array<ComplexMatrix, 3> out;
  for (int a = 0; a < 3; ++a) {
    out[a] = ComplexMatrix::Zero(2, 2);
    for (int c = 0; c < 3; ++c) out[a] += (-0.5 * constants::mu_B * coupling(a, c)) * s[c];
  }
  return out;
}

Eigen::VectorXcd bare_state(const IonSpec& ion, Manifold manifold, const Vec3& field_direction, const LevelRef& ref) {
  const Vec3 u = pseudospin_axis(ion.g(manifold), field_direction);
  const Vec3 n = nuclear_axis(ion, manifold, field_direction);
  Eigen::VectorXcd e = eigvec_along(paulis(), u, 0.5, ref.branch == 0 ? -0.5 : 0.5);
  Eigen::VectorXcd k = eigvec_along(spin_array(ion.I), n, ion.I, ref.m);
  return kron(e, k);
}

ComplexMatrix two_ion_interaction(const DipolePair& pair, const FieldSpec& field) {
  const Vec3 b = field.direction();
  const auto m1 = moment_operators(pair.ion1.g_excited, b);
  const auto m2 = moment_operators(pair.ion2.g_excited, b);
  const ComplexMatrix one1 = identity(spin_dim(pair.ion1.I));
  const ComplexMatrix one2 = identity(spin_dim(pair.ion2.I));
  const Mat3 k = dipolar_kernel(pair.r12) / constants::h;
  const Eigen::Index d = 2 * one1.rows() * 2 * one2.rows();
  ComplexMatrix h = ComplexMatrix::Zero(d, d);
  for (int a = 0; a < 3; ++a) {
    ComplexMatrix left = kron(m1[a], one1);
    for (int c = 0; c < 3; ++c) {
      if (k(a, c) == 0) continue;
      h += k(a, c) * kron(left, kron(m2[c], one2));
    }
  }
  return 0.5 * (h + h.adjoint());
}

ComplexMatrix two_ion_hamiltonian(const DipolePair& pair, const FieldSpec& field, const QubitEncoding& encoding) {
  if (pair.ion1.I != pair.ion2.I) throw InputError("two_ion_hamiltonian: ions must share the nuclear spin");
  encoding.validate(pair.ion1.I);
  const ComplexMatrix h1 = single_ion_hamiltonian(pair.ion1, Manifold::excited, field);
  const ComplexMatrix h2 = single_ion_hamiltonian(pair.ion2, Manifold::excited, field);
  ComplexMatrix h = kron(h1, identity(h2.rows())) + kron(identity(h1.rows()), h2);
  h += two_ion_interaction(pair, field);
  return h;
}

std::string HierarchyCheck::describe() const {
  std::ostringstream os;
  os << "J_dip/h=" << J_dip << " Hz " << (dipolar_below_hyperfine ? "<" : ">=") << " A_J/h=" << A_J << " Hz "
     << (hyperfine_below_zeeman ? "<" : ">=") << " mu_B B/h=" << zeeman << " Hz "
     << (zeeman_below_crystal_field ? "<" : ">=") << " delta_CF/h=" << delta_CF << " Hz";
  return os.str();
}

HierarchyCheck check_hierarchy(double J_dip, double A_J, double B, double delta_CF) {
  HierarchyCheck c{std::abs(J_dip), std::abs(A_J), constants::mu_B * B / constants::h, delta_CF, false, false, false};
  c.dipolar_below_hyperfine = c.J_dip < c.A_J;
  c.hyperfine_below_zeeman = c.A_J < c.zeeman;
  c.zeeman_below_crystal_field = c.zeeman < c.delta_CF;
  return c;
}

void require_hierarchy(const HierarchyCheck& c) {
  if (!c.dipolar_below_hyperfine) throw RegimeError("energy hierarchy violated: J_dip < A_J required; " + c.describe());
  if (!c.hyperfine_below_zeeman) throw RegimeError("energy hierarchy violated: A_J < mu_B B required; " + c.describe());
  if (!c.zeeman_below_crystal_field)
    throw RegimeError("energy hierarchy violated: mu_B B < delta_CF required; " + c.describe());
}

}  // namespace renq
