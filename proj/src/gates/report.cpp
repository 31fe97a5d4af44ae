#include "renq/gates/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"
#include "renq/core/spin.hpp"
#include "renq/gates/cnot.hpp"
#include "renq/gates/schedule.hpp"
#include "renq/ion/hamiltonian.hpp"

namespace renq {

namespace {

Vec3 any_perpendicular(const Vec3& m) {
  Vec3 t = std::abs(m.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  return (t - t.dot(m) * m).normalized();
}

Vec3 pair_vector(const DipolePair& pair, const Vec3& m, PairGeometry g) {
  const double r = pair.r12.norm();
  switch (g) {
    case PairGeometry::as_given: return pair.r12;
    case PairGeometry::perpendicular: return r * any_perpendicular(m);
    case PairGeometry::parallel: return r * m;
  }
  return pair.r12;
}

double rabi_frequency(const IonSpec& ion, double B_ac, Drive drive) {
  const bool electric = drive == Drive::electric_dipole || (drive == Drive::automatic && ion.mu_e_transition > 0);
  if (electric) {
    if (!(ion.mu_e_transition > 0)) throw InputError("cnot_report: electric drive needs a transition dipole");
    return constants::c * ion.mu_e_transition * B_ac / constants::hbar;
  }
  return constants::mu_B * B_ac / constants::hbar;
}

}  // namespace

GateReport cnot_report(const DipolePair& pair, const FieldSpec& field, const QubitEncoding& encoding, double B_ac,
                       double T2, const CnotOptions& options) {
  if (!(B_ac > 0)) throw InputError("cnot_report: B_ac must be positive");
  if (!(T2 > 0)) throw InputError("cnot_report: T2 must be positive");
  if (!(options.pulse_area_factor > 0)) throw InputError("cnot_report: pulse_area_factor must be positive");
  const IonSpec& ion = pair.ion1;
  ion.validate();
  encoding.validate(ion.I);
  const Vec3 b = field.direction();

  GateReport rep;
  rep.rabi = rabi_frequency(ion, B_ac, options.drive);
  rep.nuclear_axis_angle = nuclear_axis_angle(ion, b);
  rep.mu_m = effective_moment(ion.g_excited, b);

  auto overlap = [&](double m_ground, double m_excited) { return nuclear_overlap(ion, b, m_ground, m_excited); };
  auto pulse_time = [&](double o) {
    return o < kMinTransitionOverlap ? std::numeric_limits<double>::infinity()
                                     : options.pulse_area_factor / (rep.rabi * o);
  };

  // activation: passive_k -> active_k
  double fast = 0;
  rep.t_act = 0;
  for (int k = 0; k < 2; ++k) {
    const double o = overlap(encoding.passive[k].m, encoding.active[k].m);
    fast = std::max(fast, o);
    rep.t_act += pulse_time(o);
  }
  if (!std::isfinite(rep.t_act))
    throw InfeasibleError("cnot_report: activation overlap below threshold (nuclear axes nearly parallel)");

  // X on the active qubit through a lower-branch ground level p: pulses a-p, b-p, a-p
  rep.t_x = std::numeric_limits<double>::infinity();
  double slow = 0;
  for (int first = 0; first < 2; ++first) {
    const LevelRef a = encoding.active[first], c = encoding.active[1 - first];
    for (int k = 0; k < spin_dim(ion.I); ++k) {
      const double pm = -ion.I + k;
      const double oa = overlap(pm, a.m), oc = overlap(pm, c.m);
      const double t = 2 * pulse_time(oa) + pulse_time(oc);
      if (t < rep.t_x) {
        rep.t_x = t;
        slow = std::min(oa, oc);
      }
    }
  }
  // no X path (parallel axes) leaves t_x, the echo overhead and the asymmetry infinite;
  // the headline figures do not depend on them
  rep.asymmetry = slow > 0 ? fast / slow : std::numeric_limits<double>::infinity();

  const Vec3 m = moment_direction(ion.g_excited, b);
  DipolePair placed = pair;
  placed.r12 = pair_vector(pair, m, options.geometry);
  rep.J_dip = ising_projection(placed, ion.g_excited, field);
  if (rep.J_dip == 0) throw InfeasibleError("cnot_report: Ising coupling vanishes (magic angle)");
  rep.t_cnot = cnot_time(std::abs(rep.J_dip));
  rep.total_time = rep.t_cnot + 2 * rep.t_act;

  const double B = options.B > 0 ? options.B : field.magnitude;
  RegimeParams p;
  p.J_dip = std::abs(rep.J_dip);
  p.A_J = std::abs(ion.A_J_excited);
  p.E_Z = constants::mu_B * B / constants::h;
  p.E_Zn = std::abs(ion.g_N) * constants::mu_N * B / constants::h;
  p.delta_CF = ion.delta_CF;
  const auto ax = ion.g_excited.axial_form();
  p.g_perp_over_par = ax.g_par > 0 ? ax.g_perp / ax.g_par : 0.0;
  const ActiveKind kind =
      encoding.kind == EncodingKind::electronic ? ActiveKind::electronic : ActiveKind::electro_nuclear;
  const ResidualEstimate res = encoding_error_scaling(kind, p);
  rep.residual_process = res.process;

  auto assemble = [&](double total, double act) {
    std::vector<std::pair<ErrorChannel, double>> br = {
        {ErrorChannel::coherence, total / T2},
        {ErrorChannel::activation_time, std::pow(act / rep.t_cnot, 2)},
        {res.channel, res.infidelity},
    };
    return br;
  };
  rep.breakdown = assemble(rep.total_time, rep.t_act);
  auto worst = std::max_element(rep.breakdown.begin(), rep.breakdown.end(),
                                [](const auto& x, const auto& y) { return x.second < y.second; });
  rep.dominant = worst->first;
  rep.F_min = std::clamp(1 - worst->second, 0.0, 1.0);

  // echo X segments: one X block per echo half, each on both ions; with deactivation the
  // partner is parked in its passive levels around the X
  const double block = options.deactivate_during_echo ? 2 * (2 * rep.t_act + rep.t_x) : rep.t_x;
  rep.echo_overhead = 2 * block;
  rep.timed_total_time = rep.total_time + rep.echo_overhead;
  double timed_err = 0;
  for (const auto& [ch, v] : assemble(rep.timed_total_time, std::max(rep.t_act, block))) timed_err = std::max(timed_err, v);
  rep.timed_F_min = std::clamp(1 - timed_err, 0.0, 1.0);

  std::ostringstream os;
  os << "rabi=" << (options.drive == Drive::magnetic_dipole || ion.mu_e_transition <= 0 ? "mu_B*B_ac/hbar" : "c*mu_e*B_ac/hbar")
     << "; pulse=area_factor/(rabi*overlap), area_factor=" << options.pulse_area_factor
     << "; t_total=t_cnot+2*t_act; echo X counted in timed_total only"
     << "; geometry="
     << (options.geometry == PairGeometry::as_given ? "as_given"
         : options.geometry == PairGeometry::perpendicular ? "perpendicular" : "parallel")
     << "; residual=" << res.process << "; B=" << B << " T";
  rep.provenance = os.str();
  return rep;
}

}  // namespace renq
