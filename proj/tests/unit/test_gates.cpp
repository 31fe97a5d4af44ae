#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"
#include "renq/core/expm.hpp"
#include "renq/core/fidelity.hpp"
#include "renq/core/matrix.hpp"
#include "renq/core/spin.hpp"
#include "renq/gates/cnot.hpp"
#include "renq/gates/report.hpp"
#include "renq/gates/residual.hpp"
#include "renq/gates/schedule.hpp"
#include "renq/ion/hamiltonian.hpp"
#include "renq/materials/material.hpp"

using namespace renq;
namespace k = renq::constants;

namespace {

const double deg = k::pi / 180;

ComplexMatrix zz() { return kron(pauli_z(), pauli_z()); }
ComplexMatrix zi() { return kron(pauli_z(), identity(2)); }
ComplexMatrix iz() { return kron(identity(2), pauli_z()); }
ComplexMatrix xx() { return kron(pauli_x(), pauli_x()); }

Eigen::VectorXcd basis(int i) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(i) = 1;
  return v;
}

IonSpec spin_half_ion(const GTensor& g_ground, const GTensor& g_excited) {
  IonSpec ion;
  ion.J_ground = 7.5;
  ion.J_excited = 6.5;
  ion.I = 0.5;
  ion.A_J_ground = ion.A_J_excited = 500e6;
  ion.g_ground = g_ground;
  ion.g_excited = g_excited;
  ion.g_N = 0.5;
  ion.delta_J = 200e12;
  ion.delta_CF = 1e12;
  ion.T2_excited = 1e-3;
  return ion;
}

struct ErCase {
  MaterialRecord m = builtin_material("er-yso-site1");
  FieldSpec field{minimum_field(m.ion), 35 * deg, 132 * deg};
  QubitEncoding enc = QubitEncoding::standard(EncodingKind::electro_nuclear, m.ion.I);
  CnotOptions opt = [] {
    CnotOptions o;
    o.geometry = PairGeometry::perpendicular;
    return o;
  }();
  GateReport at(double r, double B_ac = 1e-3, double T2 = -1) const {
    DipolePair p(m.ion, m.ion, Vec3(r, 0, 0));
    return cnot_report(p, field, enc, B_ac, T2 > 0 ? T2 : m.ion.T2_excited, opt);
  }
};

}  // namespace

TEST(Cnot, SynthesisEqualsCanonical) {
  ComplexMatrix c = cnot_ideal();
  EXPECT_GE(min_gate_fidelity(cnot_canonical(), c), 1 - 1e-12);
  // the canonical matrix swaps |10> and |11>
  ComplexMatrix ref = identity(4);
  ref.block(2, 2, 2, 2) = pauli_x();
  EXPECT_EQ(cnot_canonical(), ref);
  Eigen::VectorXcd out = c * basis(2);
  EXPECT_NEAR(std::abs(out(3)), 1.0, 1e-12);
}

TEST(Cnot, BellStateEntropy) {
  Eigen::VectorXcd plus = (basis(0) + basis(2)) / std::sqrt(2.0);
  EXPECT_NEAR(entanglement_entropy(cnot_ideal() * plus), std::log(2.0), 1e-12);
  EXPECT_NEAR(entanglement_entropy(basis(1)), 0.0, 1e-12);
}

TEST(Cnot, CphaseAndSqrtGates) {
  ComplexMatrix c = cphase_half();
  EXPECT_LT((c - evolution_step(zz(), k::pi / 4)).cwiseAbs().maxCoeff(), 1e-14);
  ComplexMatrix sx = sqrt_gate(Axis::x, 1);
  EXPECT_GE(min_gate_fidelity(kron(identity(2), pauli_x()), sx * sx), 1 - 1e-12);
}

TEST(Cnot, TimeTimesCouplingIsQuarterPiHbar) {
  for (double j : {1.0, 3.07e4, 2.2e7}) EXPECT_NEAR(cnot_time(j) * j * k::h / (k::pi * k::hbar / 4), 1.0, 1e-15);
  EXPECT_THROW(cnot_time(0), InfeasibleError);
}

TEST(Echo, CancelsSingleIonTermsForRandomCoefficients) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-5e5, 5e5);
  const double J = 3e4;
  for (int i = 0; i < 100; ++i) {
    double a = u(rng), b = u(rng);
    ComplexMatrix h = a * zi() + b * iz() + J * zz();
    EXPECT_GE(min_gate_fidelity(cphase_half(), spin_echo_cphase(h, J)), 1 - 1e-10) << a << " " << b;
  }
  EXPECT_THROW(spin_echo_cphase(zz(), 0.0), InfeasibleError);
}

// Full propagation with a transverse V sigma_x sigma_x residual against the closed-form bound.
TEST(Residual, ResonantBoundConsistency) {
  const double J = 3e4;
  for (double ratio : {0.005, 0.01, 0.02, 0.05}) {
    const double V = ratio * J;
    double err = 1 - min_gate_fidelity(cphase_half(), spin_echo_cphase(J * zz() + V * xx(), J));
    double bound = 1 - fidelity_bound_resonant(V, J);
    EXPECT_LE(err, 4 * bound) << ratio;
    EXPECT_GT(err, bound / 2) << ratio;
    if (ratio <= 0.05) EXPECT_LT(err, 2 * bound) << ratio;
  }
  EXPECT_EQ(fidelity_bound_resonant(0, J), 1.0);
  EXPECT_NEAR(1 - fidelity_bound_resonant(0.01, 1.0), 6.17e-5, 1e-7);
}

// Two-level admixture: the largest leakage of |0> under [[0, V], [V, D]] is sin^2(2 theta).
TEST(Residual, OffResonantBoundVersusTwoLevelDiagonalization) {
  EXPECT_EQ(fidelity_bound_offresonant(0, 1e9), 1.0);
  EXPECT_NEAR(1 - fidelity_bound_offresonant(0.01, 1.0), 4e-4, 1e-15);
  for (double ratio : {0.001, 0.01, 0.03, 0.05}) {
    const double D = 1e9, V = ratio * D;
    Eigen::Matrix2d h;
    h << 0, V, V, D;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(h);
    double c = es.eigenvectors()(0, 0), s = es.eigenvectors()(1, 0);
    double leak = 4 * c * c * s * s;
    double bound = 1 - fidelity_bound_offresonant(V, D);
    EXPECT_LT(bound / leak, 2.0);
    EXPECT_GT(bound / leak, 0.5);
    EXPECT_LE(leak, 4 * bound);
  }
}

TEST(Residual, RegimeScalingExamples) {
  // g_perp = 0: the electronic active qubit is the better choice, limited by off-resonant flip-flops
  auto g0 = encoding_error_scaling(ActiveKind::electronic, typical_regime(10e-9, 0.0));
  EXPECT_GT(g0.infidelity, 1e-15);
  EXPECT_LT(g0.infidelity, 1e-13);
  EXPECT_EQ(g0.channel, ErrorChannel::residual_offresonant);
  EXPECT_LT(g0.infidelity, encoding_error_scaling(ActiveKind::electro_nuclear, typical_regime(10e-9, 0.0)).infidelity);
  auto gp = encoding_error_scaling(ActiveKind::electro_nuclear, typical_regime(10e-9, 1.0));
  EXPECT_GT(gp.infidelity, 1e-6);
  EXPECT_LT(gp.infidelity, 1e-4);
  EXPECT_EQ(gp.channel, ErrorChannel::residual_resonant);
  EXPECT_FALSE(gp.process.empty());

  RegimeParams bad = typical_regime(10e-9, 1.0);
  bad.E_Z = bad.A_J / 2;
  try {
    encoding_error_scaling(ActiveKind::electro_nuclear, bad);
    FAIL();
  } catch (const RegimeError& e) {
    EXPECT_NE(std::string(e.what()).find("A_J"), std::string::npos);
  }
}

TEST(Residual, CrossoverRadius) {
  const double r_ref = 10e-9;
  double r = flipflop_crossover_radius(typical_regime(r_ref, 1.0), r_ref);
  EXPECT_NEAR(r / 1.3e-9, 1.0, 0.2);
  // at the crossover both terms are equal
  RegimeParams p = typical_regime(r, 1.0);
  EXPECT_NEAR(std::pow(p.J_dip / p.A_J, 2) / std::pow(p.A_J / p.E_Z, 4), 1.0, 1e-9);
}

TEST(XGate, IdealSpinHalfPerpendicularAxes) {
  // g^T b along x for the ground doublet and along y for the excited one: axes at 90 degrees
  IonSpec ion = spin_half_ion(GTensor(Eigen::Vector3d(2, 0, 0).asDiagonal()), GTensor(Eigen::Vector3d(0, 2, 0).asDiagonal()));
  FieldSpec f(0.5, k::pi / 2, k::pi / 4);
  EXPECT_NEAR(nuclear_axis_angle(ion, f.direction()), k::pi / 2, 1e-12);
  auto s = x_gate_schedule(ion, f, 1e-3);
  EXPECT_EQ(s.pulse_count(), 3u);
  EXPECT_NEAR(s.duration() / x_gate_time_estimate(1e-3), 1.0, 1e-12);
  EXPECT_NEAR(x_gate_time_estimate(1e-3), 3 * k::hbar / (k::mu_B * 1e-3), 1e-20);
  EXPECT_NEAR(x_gate_time_estimate(1e-3) / 35e-9, 1.0, 0.05);
  EXPECT_NEAR(direct_nuclear_drive_time(1e-3) / 21e-6, 1.0, 0.02);
  EXPECT_NEAR(direct_nuclear_drive_time(1e-3) / x_gate_time_estimate(1e-3), k::mu_B / (3 * k::mu_N), 1e-9);
  EXPECT_NEAR(k::mu_B / (3 * k::mu_N) / 600, 1.0, 0.05);
}

TEST(XGate, ParallelAxesInfeasible) {
  IonSpec ion = spin_half_ion(GTensor::axial(6, 1, Vec3(1, 1, 0)), GTensor::axial(6, 1, Vec3(1, 1, 0)));
  EXPECT_THROW(x_gate_schedule(ion, FieldSpec(0.5, 0.3, 0.2), 1e-3), InfeasibleError);
  // a small axis angle makes the schedule long
  IonSpec tilted = ion;
  tilted.g_excited = GTensor::axial(6, 1, Vec3(1, 1, 0.05));
  double t_small = x_gate_schedule(tilted, FieldSpec(0.5, 0.3, 0.2), 1e-3).duration();
  tilted.g_excited = GTensor::axial(6, 1, Vec3(1, 1, 0.6));
  double t_large = x_gate_schedule(tilted, FieldSpec(0.5, 0.3, 0.2), 1e-3).duration();
  EXPECT_GT(t_small, t_large);
}

TEST(XGate, SegmentsReferenceEncodingLevels) {
  ErCase c;
  auto s = x_gate_schedule(c.m.ion, c.field, 1e-3, c.enc);
  ASSERT_EQ(s.pulse_count(), 3u);
  for (auto& seg : s.segments) {
    const auto* p = std::get_if<PulseSegment>(&seg);
    ASSERT_NE(p, nullptr);
    EXPECT_GE(p->duration, 0);
    EXPECT_GE(p->overlap, kMinTransitionOverlap);
    EXPECT_EQ(p->from.manifold, Manifold::ground);
    EXPECT_EQ(p->to.manifold, Manifold::excited);
  }
}

TEST(Report, ErYsoStructure) {
  ErCase c;
  GateReport r = c.at(10e-9);
  EXPECT_GE(r.F_min, 0);
  EXPECT_LE(r.F_min, 1);
  double worst = 0;
  for (auto& [ch, v] : r.breakdown) {
    EXPECT_GE(v, 0) << to_string(ch);
    worst = std::max(worst, v);
  }
  EXPECT_GE(1 - r.F_min, worst - 1e-15);
  EXPECT_NEAR(r.t_cnot * std::abs(r.J_dip) * k::h, k::pi * k::hbar / 4, 1e-12 * k::pi * k::hbar);
  EXPECT_NEAR(r.total_time, r.t_cnot + 2 * r.t_act, 1e-18);
  EXPECT_GT(r.timed_total_time, r.total_time);
  EXPECT_GT(r.F_min, 0.99);
  EXPECT_LT(r.total_time, 5e-6);
}

TEST(Report, MonotoneInCoherenceAndActivationTime) {
  ErCase c;
  double prev = 0;
  for (double T2 : {1e-1, 1e-2, 4.4e-3, 1e-3, 1e-4}) {
    double e = 1 - c.at(10e-9, 1e-3, T2).F_min;
    EXPECT_GE(e, prev - 1e-15) << T2;
    prev = e;
  }
  prev = 0;
  for (double B_ac : {1e-1, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4}) {
    GateReport r = c.at(10e-9, B_ac);
    double e = 1 - r.F_min;
    EXPECT_GE(e, prev - 1e-15) << B_ac;
    prev = e;
  }
}

TEST(Report, ResidualLimitedWhenFastAndCoherent) {
  ErCase c;
  GateReport r = c.at(10e-9, 10.0, 1e6);
  EXPECT_TRUE(r.dominant == ErrorChannel::residual_resonant || r.dominant == ErrorChannel::residual_offresonant)
      << to_string(r.dominant);
}

TEST(Report, HighFidelityOverContiguousRange) {
  ErCase c;
  std::vector<bool> good;
  for (double r = 2e-9; r <= 40e-9 + 1e-12; r += 1e-9) good.push_back(c.at(r).F_min > 0.99);
  int first = -1, last = -1, runs = 0;
  for (std::size_t i = 0; i < good.size(); ++i) {
    if (good[i] && (i == 0 || !good[i - 1])) ++runs;
    if (good[i]) {
      if (first < 0) first = static_cast<int>(i);
      last = static_cast<int>(i);
    }
  }
  EXPECT_EQ(runs, 1);
  EXPECT_LE(2 + first, 10);
  EXPECT_GE(2 + last, 10);
  EXPECT_GE(last - first, 5);
}

TEST(Report, GeometryOptions) {
  ErCase c;
  CnotOptions par = c.opt;
  par.geometry = PairGeometry::parallel;
  DipolePair p(c.m.ion, c.m.ion, Vec3(10e-9, 0, 0));
  GateReport perp = cnot_report(p, c.field, c.enc, 1e-3, c.m.ion.T2_excited, c.opt);
  GateReport along = cnot_report(p, c.field, c.enc, 1e-3, c.m.ion.T2_excited, par);
  EXPECT_NEAR(along.J_dip / perp.J_dip, -2.0, 1e-9);
}
