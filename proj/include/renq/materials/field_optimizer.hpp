#pragma once

#include <vector>

#include "renq/gates/report.hpp"
#include "renq/materials/material.hpp"

namespace renq {

enum class FieldObjective { min_error };

struct AngleSearchSettings {
  double grid_step_deg = 10.0;  // coarse lattice
  int starts = 4;               // best distinct lattice minima refined
  int max_iterations = 300;
  double simplex_tol_deg = 1e-4;
  double flat_tol = 1e-9;       // relative spread below which the landscape counts as flat
  CnotOptions options = [] {
    CnotOptions o;
    o.geometry = PairGeometry::perpendicular;
    return o;
  }();
};

struct AngleCandidate {
  double theta;  // rad
  double phi;    // rad
  double error;  // 1 - F_min
};

// Angular offset between the optimum and a reference direction, modulo b -> -b.
struct FrameDiagnostic {
  double ref_theta = 0, ref_phi = 0;  // rad
  double offset = 0;                  // rad
  double error_at_reference = 0;
  double error_at_optimum = 0;
};

struct AngleOptimization {
  double theta = 0;  // rad
  double phi = 0;    // rad
  GateReport report;
  bool flat = false;
  std::vector<AngleCandidate> minima;  // refined local minima, best first (all lattice points if flat)
  std::vector<double> log;             // best objective after each refinement iteration of the winning start
  int evaluations = 0;
  FrameDiagnostic diagnostic;
};

// 1 - F_min of the CNOT report for the pair at separation r with the static field at (theta, phi).
double field_angle_objective(const MaterialRecord& m, double r, double B, double B_ac, double theta, double phi,
                             const CnotOptions& options, GateReport* report = nullptr);

// Deterministic: lattice scan, then Nelder-Mead from the best lattice minima.
AngleOptimization optimize_field_angles(const MaterialRecord& m, double r, double B, double B_ac,
                                       FieldObjective objective = FieldObjective::min_error,
                                       const AngleSearchSettings& settings = {});

// (theta, phi) and (pi - theta, phi + pi) describe the same axis; the report is invariant under b -> -b.
double axis_separation(double theta1, double phi1, double theta2, double phi2);

FrameDiagnostic frame_diagnostic(const MaterialRecord& m, double r, double B, double B_ac,
                                 const AngleOptimization& opt, double ref_theta, double ref_phi,
                                 const CnotOptions& options);

}  // namespace renq
