#include "renq/materials/field_optimizer.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "renq/core/constants.hpp"
#include "renq/core/errors.hpp"
#include "renq/core/parallel.hpp"
#include "renq/ion/ion_spec.hpp"

namespace renq {

namespace {

constexpr double kDeg = constants::pi / 180;
constexpr double kPenalty = 1e6;

struct Problem {
  const MaterialRecord* m;
  double r, B, B_ac;
  const CnotOptions* options;
};

double eval(const Problem& p, double theta, double phi) {
  return field_angle_objective(*p.m, p.r, p.B, p.B_ac, theta, phi, *p.options);
}

double gsl_objective(const gsl_vector* x, void* params) {
  const auto* p = static_cast<const Problem*>(params);
  const double v = eval(*p, gsl_vector_get(x, 0) * kDeg, gsl_vector_get(x, 1) * kDeg);
  // the simplex needs finite values; inadmissible directions get a penalty above any error
  return std::isfinite(v) ? v : kPenalty;
}

struct Refined {
  AngleCandidate best;
  std::vector<double> log;
  int evaluations = 0;
};

Refined refine(const Problem& p, double theta_deg, double phi_deg, const AngleSearchSettings& s) {
  static const gsl_error_handler_t* previous = gsl_set_error_handler_off();
  (void)previous;
  gsl_multimin_fminimizer* mm = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2);
  gsl_multimin_function fn{&gsl_objective, 2, const_cast<Problem*>(&p)};
  gsl_vector* x = gsl_vector_alloc(2);
  gsl_vector* step = gsl_vector_alloc(2);
  gsl_vector_set(x, 0, theta_deg);
  gsl_vector_set(x, 1, phi_deg);
  gsl_vector_set_all(step, 0.5 * s.grid_step_deg);
  gsl_multimin_fminimizer_set(mm, &fn, x, step);
  Refined out;
  out.evaluations = 3;
  for (int it = 0; it < s.max_iterations; ++it) {
    if (gsl_multimin_fminimizer_iterate(mm) != GSL_SUCCESS) break;
    out.evaluations += 2;
    out.log.push_back(mm->fval);
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(mm), s.simplex_tol_deg) == GSL_SUCCESS) break;
  }
  const FieldSpec f(1.0, gsl_vector_get(mm->x, 0) * kDeg, gsl_vector_get(mm->x, 1) * kDeg);
  out.best = {f.theta, f.phi, mm->fval};
  gsl_vector_free(x);
  gsl_vector_free(step);
  gsl_multimin_fminimizer_free(mm);
  return out;
}

}  // namespace

double axis_separation(double t1, double p1, double t2, double p2) {
  const Vec3 a = FieldSpec(1, t1, p1).direction(), b = FieldSpec(1, t2, p2).direction();
  return std::acos(std::clamp(std::abs(a.dot(b)), 0.0, 1.0));
}

double field_angle_objective(const MaterialRecord& m, double r, double B, double B_ac, double theta, double phi,
                             const CnotOptions& options, GateReport* report) {
  const DipolePair pair(m.ion, m.ion, Vec3(r, 0, 0));
  CnotOptions o = options;
  if (o.B <= 0) o.B = B;
  try {
    GateReport rep = cnot_report(pair, FieldSpec(B, theta, phi), QubitEncoding::standard(EncodingKind::electro_nuclear, m.ion.I),
                                 B_ac, m.ion.T2_excited, o);
    if (report) *report = rep;
    return 1 - rep.F_min;
  } catch (const InfeasibleError&) {
    return std::numeric_limits<double>::infinity();
  } catch (const DegenerateEncodingError&) {
    return std::numeric_limits<double>::infinity();
  }
}

AngleOptimization optimize_field_angles(const MaterialRecord& m, double r, double B, double B_ac,
                                       FieldObjective objective, const AngleSearchSettings& s) {
  if (objective != FieldObjective::min_error) throw InputError("optimize_field_angles: unsupported objective");
  if (!(r > 0) || !(B > 0) || !(B_ac > 0)) throw InputError("optimize_field_angles: r, B and B_ac must be positive");
  if (!(s.grid_step_deg > 0 && s.grid_step_deg <= 90)) throw InputError("optimize_field_angles: bad grid step");
  const Problem prob{&m, r, B, B_ac, &s.options};

  // lattice over the hemisphere-free chart; theta = 0 and 180 appear once
  const int nt = static_cast<int>(std::lround(180 / s.grid_step_deg));
  const int np = static_cast<int>(std::lround(360 / s.grid_step_deg));
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i <= nt; ++i)
    for (int j = 0; j < ((i == 0 || i == nt) ? 1 : np); ++j) pts.emplace_back(i * s.grid_step_deg, j * s.grid_step_deg);
  const auto vals = parallel_map(pts.size(), [&](std::size_t k) { return eval(prob, pts[k].first * kDeg, pts[k].second * kDeg); });

  AngleOptimization out;
  out.evaluations = static_cast<int>(pts.size());
  const double lo = *std::min_element(vals.begin(), vals.end());
  const double hi = *std::max_element(vals.begin(), vals.end());
  if (!std::isfinite(lo)) throw InfeasibleError("optimize_field_angles: no admissible field direction");

  if (std::isfinite(hi) && hi - lo <= s.flat_tol * std::max(1.0, std::abs(lo))) {
    out.flat = true;
    for (std::size_t k = 0; k < pts.size(); ++k) out.minima.push_back({pts[k].first * kDeg, pts[k].second * kDeg, vals[k]});
    out.theta = out.minima.front().theta;
    out.phi = out.minima.front().phi;
    field_angle_objective(m, r, B, B_ac, out.theta, out.phi, s.options, &out.report);
    out.diagnostic = {0, 0, 0, lo, lo};
    return out;
  }

  // lattice local minima (8-neighbourhood on the (theta, phi) chart, phi periodic)
  auto at = [&](int i, int j) -> double {
    if (i <= 0) return vals[0];
    if (i >= nt) return vals.back();
    j = ((j % np) + np) % np;
    return vals[1 + (i - 1) * np + j];
  };
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const int i = static_cast<int>(std::lround(pts[k].first / s.grid_step_deg));
    const int j = static_cast<int>(std::lround(pts[k].second / s.grid_step_deg));
    bool local = true;
    if (i > 0 && i < nt)
      for (int di = -1; di <= 1 && local; ++di)
        for (int dj = -1; dj <= 1 && local; ++dj)
          if ((di || dj) && at(i + di, j + dj) < vals[k]) local = false;
    if (local && std::isfinite(vals[k])) order.push_back(k);
  }
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vals[a] < vals[b] || (vals[a] == vals[b] && a < b); });
  if (order.size() > static_cast<std::size_t>(s.starts)) order.resize(s.starts);

  auto refined = parallel_map(order.size(), [&](std::size_t k) { return refine(prob, pts[order[k]].first, pts[order[k]].second, s); });
  std::size_t best = 0;
  for (std::size_t k = 0; k < refined.size(); ++k) {
    out.evaluations += refined[k].evaluations;
    out.minima.push_back(refined[k].best);
    if (refined[k].best.error < refined[best].best.error) best = k;
  }
  std::stable_sort(out.minima.begin(), out.minima.end(), [](const auto& a, const auto& b) { return a.error < b.error; });
  out.theta = refined[best].best.theta;
  out.phi = refined[best].best.phi;
  out.log = refined[best].log;
  field_angle_objective(m, r, B, B_ac, out.theta, out.phi, s.options, &out.report);
  return out;
}

FrameDiagnostic frame_diagnostic(const MaterialRecord& m, double r, double B, double B_ac,
                                 const AngleOptimization& opt, double ref_theta, double ref_phi,
                                 const CnotOptions& options) {
  FrameDiagnostic d;
  d.ref_theta = ref_theta;
  d.ref_phi = ref_phi;
  d.offset = axis_separation(opt.theta, opt.phi, ref_theta, ref_phi);
  d.error_at_reference = field_angle_objective(m, r, B, B_ac, ref_theta, ref_phi, options);
  d.error_at_optimum = 1 - opt.report.F_min;
  return d;
}

}  // namespace renq
