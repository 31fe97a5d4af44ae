#include "renq/gates/schedule.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"
#include "renq/core/spin.hpp"
#include "renq/ion/hamiltonian.hpp"

namespace renq {

double GateSchedule::duration() const {
  double t = 0;
  for (const auto& s : segments) {
    if (auto p = std::get_if<PulseSegment>(&s)) t += p->duration;
    if (auto f = std::get_if<FreeSegment>(&s)) t += f->duration;
  }
  return t;
}

std::size_t GateSchedule::pulse_count() const {
  std::size_t n = 0;
  for (const auto& s : segments) n += std::holds_alternative<PulseSegment>(s);
  return n;
}

double x_gate_time_estimate(double B_ac) {
  if (!(B_ac > 0)) throw InputError("B_ac must be positive");
  return 3 * constants::hbar / (constants::mu_B * B_ac);
}

double direct_nuclear_drive_time(double B_ac) {
  if (!(B_ac > 0)) throw InputError("B_ac must be positive");
  return constants::hbar / (constants::mu_N * B_ac);
}

namespace {

PulseSegment make_pulse(const LevelKey& a, const LevelKey& b, double overlap, double duration) {
  // representative shape: truncated Gaussian pi-pulse filling the segment, T_cut / T = 2
  const double tcut = 0.5 * duration;
  return PulseSegment{PulseSpec::pi_pulse(tcut / 2.0, tcut, 0.0), a, b, overlap, duration};
}

}  // namespace

GateSchedule x_gate_schedule(const IonSpec& ion, const FieldSpec& field, double B_ac, const QubitEncoding& encoding) {
  if (!(B_ac > 0)) throw InputError("x_gate_schedule: B_ac must be positive");
  encoding.validate(ion.I);
  const Vec3 b = field.direction();
  const double unit = constants::hbar / (constants::mu_B * B_ac) / std::sqrt(2.0);
  const LevelRef pa = encoding.passive[0], pb = encoding.passive[1];

  double best = std::numeric_limits<double>::infinity();
  GateSchedule out;
  double worst_overlap = 0;
  for (int first = 0; first < 2; ++first) {
    const LevelRef a = first == 0 ? pa : pb;
    const LevelRef c = first == 0 ? pb : pa;
    for (int k = 0; k < spin_dim(ion.I); ++k) {
      const LevelRef e{0, -ion.I + k};
      const double oa = nuclear_overlap(ion, b, a.m, e.m);
      const double oc = nuclear_overlap(ion, b, c.m, e.m);
      worst_overlap = std::max(worst_overlap, std::min(oa, oc));
      if (oa < kMinTransitionOverlap || oc < kMinTransitionOverlap) continue;
      const double ta = unit / oa, tc = unit / oc;
      if (2 * ta + tc >= best) continue;
      best = 2 * ta + tc;
      const LevelKey ka{Manifold::ground, a}, kc{Manifold::ground, c}, ke{Manifold::excited, e};
      out.segments = {make_pulse(ka, ke, oa, ta), make_pulse(kc, ke, oc, tc), make_pulse(ka, ke, oa, ta)};
    }
  }
  if (out.segments.empty()) {
    std::ostringstream os;
    os << "x_gate_schedule: ground and excited nuclear axes nearly parallel (best overlap " << worst_overlap << ")";
    throw InfeasibleError(os.str());
  }
  return out;
}

GateSchedule x_gate_schedule(const IonSpec& ion, const FieldSpec& field, double B_ac) {
  return x_gate_schedule(ion, field, B_ac, QubitEncoding::standard(EncodingKind::electro_nuclear, ion.I));
}

}  // namespace renq
