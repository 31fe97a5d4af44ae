#pragma once

#include <string>
#include <utility>
#include <vector>

#include "renq/gates/residual.hpp"
#include "renq/ion/ion_spec.hpp"

namespace renq {

enum class PairGeometry {
  as_given,                // pair.r12 as supplied
  perpendicular,           // |r12| kept, direction perpendicular to the active moment
  parallel,                // |r12| kept, along the active moment
};

enum class Drive { automatic, electric_dipole, magnetic_dipole };

struct CnotOptions {
  PairGeometry geometry = PairGeometry::as_given;
  Drive drive = Drive::automatic;
  // pulse duration = pulse_area_factor / (Rabi * overlap); 2 sqrt(pi) for a Gaussian of width T cut at T
  double pulse_area_factor = 3.5449077018110318;
  // echo X-gates on one ion while the partner sits in its passive levels
  bool deactivate_during_echo = true;
  double B = 0;  // static field for the residual estimate (T); 0 takes the field magnitude
};

struct GateReport {
  double total_time = 0;  // s
  double F_min = 0;
  ErrorChannel dominant = ErrorChannel::coherence;
  std::vector<std::pair<ErrorChannel, double>> breakdown;

  double t_cnot = 0;          // s
  double t_act = 0;           // s, activation of one qubit
  double t_x = 0;             // s, X on one active qubit
  double echo_overhead = 0;   // s, timed echo X segments (with deactivation when enabled)
  double timed_total_time = 0;
  double timed_F_min = 0;
  double J_dip = 0;           // Hz
  double mu_m = 0;            // J/T
  double nuclear_axis_angle = 0;  // rad
  double asymmetry = 0;       // fast / slow transition Rabi ratio
  double rabi = 0;            // rad/s, bare transition Rabi frequency
  std::string residual_process;
  std::string provenance;
};

GateReport cnot_report(const DipolePair& pair, const FieldSpec& field, const QubitEncoding& encoding, double B_ac,
                       double T2, const CnotOptions& options = {});

}  // namespace renq
