#pragma once

#include <string>
#include <variant>
#include <vector>

#include "renq/core/matrix.hpp"
#include "renq/ion/ion_spec.hpp"
#include "renq/pulse/gaussian_pulse.hpp"

namespace renq {

struct LevelKey {
  Manifold manifold = Manifold::ground;
  LevelRef ref;
  bool operator==(const LevelKey&) const = default;
};

struct PulseSegment {
  PulseSpec pulse;
  LevelKey from;
  LevelKey to;
  double overlap;   // nuclear overlap of the transition
  double duration;  // s
};

struct FreeSegment {
  double duration;  // s
};

struct IdealGateSegment {
  std::string name;
  ComplexMatrix unitary;
};

using Segment = std::variant<PulseSegment, FreeSegment, IdealGateSegment>;

struct GateSchedule {
  std::vector<Segment> segments;

  double duration() const;
  std::size_t pulse_count() const;
};

// Order-of-magnitude three-pulse estimate 3 hbar / (mu_B B_ac)
double x_gate_time_estimate(double B_ac);
// hbar / (mu_N B_ac)
double direct_nuclear_drive_time(double B_ac);

// Passive-qubit X through an excited-doublet level (three pi-pulses: a-e, b-e, a-e). Each
// pulse lasts hbar / (mu_B B_ac) * (1/sqrt2) / |overlap|, so the ideal spin-1/2 case with
// perpendicular nuclear axes takes 3 hbar / (mu_B B_ac). The intermediate level and pulse
// order minimize the total time.
GateSchedule x_gate_schedule(const IonSpec& ion, const FieldSpec& field, double B_ac, const QubitEncoding& encoding);
GateSchedule x_gate_schedule(const IonSpec& ion, const FieldSpec& field, double B_ac);

// smallest overlap accepted by x_gate_schedule
inline constexpr double kMinTransitionOverlap = 1e-3;

}  // namespace renq
