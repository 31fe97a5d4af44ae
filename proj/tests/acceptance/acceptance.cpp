// One line per acceptance criterion: id, PASS/FAIL, measured values against their bands,
// wall time. Exit status is the number of failing criteria.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "renq/analysis/addressability.hpp"
#include "renq/analysis/blockade.hpp"
#include "renq/analysis/robustness.hpp"
#include "renq/core/constants.hpp"
#include "renq/core/expm.hpp"
#include "renq/core/fidelity.hpp"
#include "renq/core/matrix.hpp"
#include "renq/core/propagate.hpp"
#include "renq/core/spin.hpp"
#include "renq/gates/cnot.hpp"
#include "renq/gates/residual.hpp"
#include "renq/gates/schedule.hpp"
#include "renq/ion/hamiltonian.hpp"
#include "renq/materials/field_optimizer.hpp"
#include "renq/materials/material.hpp"
#include "renq/pulse/gaussian_pulse.hpp"
#include "renq/pulse/pi_pulse_optimizer.hpp"

using namespace renq;
namespace k = renq::constants;

namespace {

const double deg = k::pi / 180;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // records "name=value [lo, hi]" and folds the band check into pass
  void band(const std::string& name, double v, double lo, double hi) {
    const bool ok = v >= lo && v <= hi;
    pass = pass && ok;
    detail << name << "=" << v << " [" << lo << ", " << hi << "]" << (ok ? "" : " !") << "; ";
  }
  void rel(const std::string& name, double v, double target, double tol) {
    band(name, v, target * (1 - tol), target * (1 + tol));
  }
  void check(const std::string& name, bool ok) {
    pass = pass && ok;
    detail << name << (ok ? " ok" : " FAILED") << "; ";
  }
  void note(const std::string& text) { detail << text << "; "; }
};

int failures = 0;

void criterion(const char* id, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%-4s %s  %s(%.2f s)\n", id, o.pass ? "PASS" : "FAIL", o.detail.str().c_str(), secs);
  std::fflush(stdout);
}

ComplexMatrix random_unitary(int n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = complex(g(rng), g(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  return qr.householderQ();
}

OptimizerSettings model(ErrorModel m) {
  OptimizerSettings s;
  s.model = m;
  return s;
}

}  // namespace

int main() {
  std::printf("acceptance criteria (bands as [lo, hi]; '!' marks an out-of-band value)\n");

  criterion("AC1", [](Outcome& o) {
    o.band("1-F_min(CNOT synthesis)", 1 - min_gate_fidelity(cnot_canonical(), cnot_ideal()), 0, 1e-12);
  });

  criterion("AC2", [](Outcome& o) {
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    const double J = 3.07e4;
    const ComplexMatrix zz = kron(pauli_z(), pauli_z());
    const ComplexMatrix zi = kron(pauli_z(), identity(2)), iz = kron(identity(2), pauli_z());
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      ComplexMatrix h = u(rng) * zi + u(rng) * iz + J * zz;
      worst = std::max(worst, 1 - min_gate_fidelity(cphase_half(), spin_echo_cphase(h, J)));
    }
    o.band("worst 1-F_min over 100 echoes", worst, 0, 1e-10);
  });

  criterion("AC3", [](Outcome& o) {
    o.band("analytic Omega/dw", activation_rabi_bound(1.0, 1 - 1e-6), 0.32, 0.34);
    o.band("numeric Omega/dw", activation_rabi_ratio_numeric(1 - 1e-6), 0.24, 0.28);
  });

  // Both fits and the speed-up points come from one full-evolution frontier.
  PiPulseFrontier full(model(ErrorModel::full));
  PiPulseFrontier first(model(ErrorModel::first_order));
  const auto errors = error_grid(-2, -8, 0.25);
  SpeedupCurve full_curve, first_curve;

  criterion("AC4", [&](Outcome& o) {
    first_curve = speedup_curve(errors, first);
    full_curve = speedup_curve(errors, full);
    o.band("a(first-order)", first_curve.fit.a, 1.01, 1.11);
    o.band("a(full)", full_curve.fit.a, 1.46, 1.56);
    std::ostringstream w;
    w << "fit window 1-F in [" << full_curve.fit.error_lo << ", " << full_curve.fit.error_hi << "], "
      << full_curve.fit.points << " points";
    o.note(w.str());
  });

  criterion("AC5", [&](Outcome& o) {
    if (full_curve.points.empty()) full_curve = speedup_curve(errors, full);
    o.rel("speed-up(1e-3) from fit", speedup_formula(1e-3, full_curve.fit), 25, 0.2);
    o.rel("speed-up(1e-7) from fit", speedup_formula(1e-7, full_curve.fit), 75, 0.2);
    for (const auto& p : full_curve.points) {
      const double e = p.numeric.target_error;
      if (std::abs(std::log10(e) + 3) < 1e-9 || std::abs(std::log10(e) + 7) < 1e-9) {
        std::ostringstream s;
        s << "numeric speed-up(" << e << ")=" << p.numeric.speedup << " (info)";
        o.note(s.str());
      }
    }
    optimize_pi_pulse(1e-9, 1.0, full);
    const auto osc = oscillation_spacing(full);
    o.rel("full-evolution plateau spacing / (4 pi)", osc.mean_spacing / osc.expected, 1.0, 0.1);
    optimize_pi_pulse(1e-11, 1.0, first);
    const auto osc1 = oscillation_spacing(first);
    std::ostringstream s;
    s << "first-order spacing / (4 pi)=" << osc1.mean_spacing / osc1.expected << " (info)";
    o.note(s.str());
  });

  criterion("AC6", [](Outcome& o) {
    const double kStark = 35e3;
    o.rel("dE(99%) V/cm", addressability_budget(1e4, 10e-9, 0.99, 0.99, kStark).delta_E, 50, 0.2);
    o.rel("dE(99.99%) V/cm", addressability_budget(1e4, 10e-9, 0.9999, 0.9999, kStark).delta_E, 600, 0.2);
  });

  criterion("AC7", [](Outcome& o) {
    const double tx = x_gate_time_estimate(1e-3), tn = direct_nuclear_drive_time(1e-3);
    // the formula gives 34.1 ns; the quoted 35 ns is rounded
    o.rel("three-pulse X ns", tx * 1e9, 35, 0.05);
    o.rel("direct nuclear drive us", tn * 1e6, 21, 0.05);
    o.rel("ratio", tn / tx, 600, 0.05);
  });

  criterion("AC8", [](Outcome& o) {
    const auto m = builtin_material("er-yso-site1");
    const double B = minimum_field(m.ion), B_ac = 1e-3, r0 = 10e-9;
    AngleSearchSettings s;
    const auto opt = optimize_field_angles(m, r0, B, B_ac, FieldObjective::min_error, s);
    o.band("F_min", opt.report.F_min, 0.998, 1.0);
    o.rel("total time us", opt.report.total_time * 1e6, 4.2, 0.2);
    const auto d = frame_diagnostic(m, r0, B, B_ac, opt, 35 * deg, 132 * deg, s.options);
    o.band("angle offset from (35, 132) deg, mod b -> -b", d.offset / deg, 0, 10);
    std::ostringstream a;
    a << "optimum (theta, phi)=(" << opt.theta / deg << ", " << opt.phi / deg << ") deg";
    o.note(a.str());

    // F > 99% on a contiguous r interval around 10 nm at the optimized field direction
    std::vector<double> rs;
    for (double r = 1e-9; r <= 40e-9 + 1e-15; r += 0.5e-9) rs.push_back(r);
    std::vector<bool> good;
    for (double r : rs) {
      GateReport g;
      field_angle_objective(m, r, B, B_ac, opt.theta, opt.phi, s.options, &g);
      good.push_back(g.F_min > 0.99);
    }
    const auto i0 = static_cast<std::size_t>(std::lround((r0 - rs.front()) / 0.5e-9));
    std::size_t lo = i0, hi = i0;
    while (lo > 0 && good[lo - 1]) --lo;
    while (hi + 1 < rs.size() && good[hi + 1]) ++hi;
    o.check("F > 99% at 10 nm", good[i0]);
    std::ostringstream r;
    r << "F > 99% for r in [" << rs[lo] * 1e9 << ", " << rs[hi] * 1e9 << "] nm";
    o.note(r.str());
    // Y-Y nearest-neighbour distance in the host is about 0.35 nm
    o.check("interval beyond nearest neighbour and non-degenerate", good[i0] && rs[lo] > 0.35e-9 && hi > lo);
  });

  criterion("AC9", [](Outcome& o) {
    auto decade = [&](const std::string& n, double v, double ref) { o.band(n, v, ref / 10, ref * 10); };
    const double r = 10e-9;
    decade("1-F (g_perp=0)", encoding_error_scaling(ActiveKind::electronic, typical_regime(r, 0.0)).infidelity, 1e-14);
    decade("1-F (g_perp>0)", encoding_error_scaling(ActiveKind::electro_nuclear, typical_regime(r, 1.0)).infidelity,
           1e-5);
    const auto b = robustness_budget(typical_regime(r, 1.0), 1e-3, r);
    decade("dphi_single", b.dphi_single, 5e-7);
    decade("dphi_CNOT", b.dphi_cnot, 1e-8);
    decade("J_hop/h Hz", b.J_hop, 10);
    decade("flip suppression", b.flip_suppression, 1e-12);
  });

  criterion("AC10", [](Outcome& o) {
    std::mt19937 rng(10);
    // su(2) commutators and the Casimir
    double su2 = 0;
    for (double j : {0.5, 1.5, 3.5, 6.5, 7.5}) {
      auto s = angular_momentum_ops(j);
      ComplexMatrix c = s.x * s.x + s.y * s.y + s.z * s.z;
      su2 = std::max({su2, (s.x * s.y - s.y * s.x - complex(0, 1) * s.z).cwiseAbs().maxCoeff(),
                      (c - j * (j + 1) * identity(spin_dim(j))).cwiseAbs().maxCoeff()});
    }
    o.band("su(2)/Casimir defect", su2, 0, 1e-10);

    // propagator unitarity for random time-dependent Hamiltonians
    double unit = 0;
    for (int t = 0; t < 5; ++t) {
      ComplexMatrix a = random_unitary(6, rng), b = random_unitary(6, rng);
      ComplexMatrix h0 = a + a.adjoint(), h1 = b + b.adjoint();
      auto u = propagate([&](double x) { return (h0 + std::sin(3 * x) * h1).eval(); }, 0.0, 4.0, 0.01);
      unit = std::max(unit, unitarity_defect(u));
    }
    o.band("propagator unitarity defect", unit, 0, 1e-9);

    // Kramers pairs of a time-even crystal field for half-integer J
    bool kramers = true;
    for (double j : {1.5, 6.5, 7.5}) {
      auto s = angular_momentum_ops(j);
      std::array<ComplexMatrix, 3> ops{s.x, s.y, s.z};
      std::normal_distribution<double> g;
      ComplexMatrix h = ComplexMatrix::Zero(spin_dim(j), spin_dim(j));
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          ComplexMatrix q = ops[a] * ops[b] + ops[b] * ops[a];
          h += g(rng) * (q + q.adjoint());
        }
      Eigen::VectorXd e = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(h).eigenvalues();
      const double scale = e.cwiseAbs().maxCoeff();
      for (Eigen::Index i = 0; i + 1 < e.size(); i += 2) kramers = kramers && std::abs(e(i) - e(i + 1)) < 1e-9 * scale;
    }
    o.check("Kramers degeneracy at B = 0", kramers);

    // dipolar tensor traceless and symmetric
    IonSpec ion;
    ion.I = 0.5;
    ion.A_J_ground = ion.A_J_excited = 500e6;
    ion.g_ground = ion.g_excited = GTensor::isotropic(2);
    ion.g_N = 0.5;
    ion.delta_J = 200e12;
    ion.delta_CF = 1e12;
    ion.T2_excited = 1e-3;
    double trace = 0;
    std::normal_distribution<double> g;
    for (int i = 0; i < 50; ++i) {
      Vec3 r(g(rng), g(rng), g(rng));
      Mat3 t = dipolar_coupling_tensor(DipolePair(ion, ion, r.normalized() * 7e-9));
      trace = std::max({trace, std::abs(t.trace()) / t.cwiseAbs().maxCoeff(),
                        (t - t.transpose()).cwiseAbs().maxCoeff() / t.cwiseAbs().maxCoeff()});
    }
    o.band("dipolar trace/asymmetry (relative)", trace, 0, 1e-12);

    // F_min global-phase invariance
    double phase = 0;
    for (int i = 0; i < 20; ++i) {
      ComplexMatrix u = random_unitary(4, rng), v = random_unitary(4, rng);
      const double f = min_gate_fidelity(u, v);
      phase = std::max(phase, std::abs(min_gate_fidelity(u, std::exp(complex(0, 0.37 * i)) * v) - f));
    }
    o.band("F_min phase variation", phase, 0, 1e-12);

    // step halving of the Gaussian-pulse propagation
    PulseSpec p = PulseSpec::pi_pulse(1.0, 3.0, 0.8);
    auto hp = [&](double t) { return rwa_hamiltonian(p, t); };
    double halving = (propagate(hp, -p.T_cut, p.T_cut, 2e-4) - propagate(hp, -p.T_cut, p.T_cut, 1e-4))
                         .cwiseAbs()
                         .maxCoeff();
    o.band("step-halving change", halving, 0, 1e-8);

    // residual bound vs full propagation of the echo sequence with a sigma_x sigma_x residual
    const double J = 3e4;
    const ComplexMatrix zz = kron(pauli_z(), pauli_z()), xx = kron(pauli_x(), pauli_x());
    double worst_ratio = 0;
    for (double ratio : {0.005, 0.01, 0.02, 0.05}) {
      const double V = ratio * J;
      const double err = 1 - min_gate_fidelity(cphase_half(), spin_echo_cphase(J * zz + V * xx, J));
      worst_ratio = std::max(worst_ratio, err / (1 - fidelity_bound_resonant(V, J)));
    }
    o.band("residual error / bound", worst_ratio, 0, 4);
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
