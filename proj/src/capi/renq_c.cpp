#include "renq/renq.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"
#include "renq/cli/runner.hpp"
#include "renq/core/errors.hpp"
#include "renq/core/fidelity.hpp"
#include "renq/gates/cnot.hpp"
#include "renq/analysis/addressability.hpp"
#include "renq/materials/field_optimizer.hpp"
#include "renq/materials/material.hpp"
#include "renq/materials/symmetry.hpp"
#include "renq/pulse/pi_pulse_optimizer.hpp"

struct renq_material {
  renq::MaterialRecord record;
};

struct renq_report {
  renq::GateReport report;
  double theta;
  double phi;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_record;

void set_error(const char* kind, const std::string& msg, const std::string& path = "") {
  g_error = msg;
  nlohmann::ordered_json j;
  j["error"] = {{"kind", kind}, {"message", msg}};
  if (!path.empty()) j["error"]["path"] = path;
  g_record = j.dump();
}

template <class F>
renq_status guarded(F&& f) {
  g_error.clear();
  g_record.clear();
  try {
    f();
    return RENQ_OK;
  } catch (const renq::ParseError& e) {
    set_error("parse", e.what(), e.path());
    return RENQ_ERR_PARSE;
  } catch (const renq::Error& e) {
    set_error(renq::to_string(e.kind()), e.what());
    return static_cast<renq_status>(static_cast<int>(e.kind()));
  } catch (const std::exception& e) {
    set_error("internal", e.what());
    return RENQ_ERR_INTERNAL;
  } catch (...) {
    set_error("internal", "unknown exception");
    return RENQ_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw renq::InputError(std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* renq_version(void) { return "0.1.0"; }
const char* renq_last_error(void) { return g_error.c_str(); }
const char* renq_last_error_record(void) { return g_record.c_str(); }
void renq_string_free(char* s) { std::free(s); }

renq_status renq_material_load(const char* name_or_path, renq_material** out) {
  return guarded([&] {
    require(name_or_path, "name_or_path");
    require(out, "out");
    *out = new renq_material{renq::resolve_material(name_or_path)};
  });
}

renq_status renq_material_from_json(const char* json, renq_material** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new renq_material{renq::load_material_json(json)};
  });
}

renq_status renq_material_to_json(const renq_material* m, char** out) {
  return guarded([&] {
    require(m, "material");
    require(out, "out");
    *out = dup(renq::dump_material_json(m->record));
  });
}

void renq_material_free(renq_material* m) { delete m; }

renq_status renq_minimum_field(const renq_material* m, double margin, double* out) {
  return guarded([&] {
    require(m, "material");
    require(out, "out");
    *out = renq::minimum_field(m->record.ion, margin);
  });
}

renq_status renq_cnot_report(const renq_material* m, double r, double B, double theta, double phi, double B_ac,
                             renq_report** out) {
  return guarded([&] {
    require(m, "material");
    require(out, "out");
    renq::AngleSearchSettings s;
    renq::GateReport g;
    if (!(r > 0) || !(B > 0)) throw renq::InputError("r and B must be positive");
    const double err = renq::field_angle_objective(m->record, r, B, B_ac, theta, phi, s.options, &g);
    if (!(err < 2)) throw renq::InfeasibleError("no admissible gate at the requested field direction");
    const renq::FieldSpec f(B, theta, phi);
    *out = new renq_report{g, f.theta, f.phi};
  });
}

renq_status renq_optimize_angles(const renq_material* m, double r, double B, double B_ac, renq_report** out) {
  return guarded([&] {
    require(m, "material");
    require(out, "out");
    const auto opt = renq::optimize_field_angles(m->record, r, B, B_ac);
    *out = new renq_report{opt.report, opt.theta, opt.phi};
  });
}

renq_status renq_report_get(const renq_report* rep, renq_report_field field, double* out) {
  return guarded([&] {
    require(rep, "report");
    require(out, "out");
    const auto& g = rep->report;
    switch (field) {
      case RENQ_REPORT_TOTAL_TIME: *out = g.total_time; break;
      case RENQ_REPORT_F_MIN: *out = g.F_min; break;
      case RENQ_REPORT_DOMINANT: *out = static_cast<double>(static_cast<int>(g.dominant)); break;
      case RENQ_REPORT_T_CNOT: *out = g.t_cnot; break;
      case RENQ_REPORT_T_ACT: *out = g.t_act; break;
      case RENQ_REPORT_T_X: *out = g.t_x; break;
      case RENQ_REPORT_ECHO_OVERHEAD: *out = g.echo_overhead; break;
      case RENQ_REPORT_TIMED_TOTAL_TIME: *out = g.timed_total_time; break;
      case RENQ_REPORT_TIMED_F_MIN: *out = g.timed_F_min; break;
      case RENQ_REPORT_J_DIP: *out = g.J_dip; break;
      case RENQ_REPORT_MU_M: *out = g.mu_m; break;
      case RENQ_REPORT_NUCLEAR_AXIS_ANGLE: *out = g.nuclear_axis_angle; break;
      case RENQ_REPORT_ASYMMETRY: *out = g.asymmetry; break;
      case RENQ_REPORT_RABI: *out = g.rabi; break;
      case RENQ_REPORT_THETA: *out = rep->theta; break;
      case RENQ_REPORT_PHI: *out = rep->phi; break;
      default: throw renq::InputError("unknown report field");
    }
  });
}

void renq_report_free(renq_report* rep) { delete rep; }

renq_status renq_cnot_time(double j_dip_hz, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = renq::cnot_time(j_dip_hz);
  });
}

renq_status renq_stark_detuning(double N, double r, double F_act, double F_cnot, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = renq::stark_detuning_required(N, r, F_act, F_cnot);
  });
}

renq_status renq_activation_rabi_bound(double delta_omega, double F_pi, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = renq::activation_rabi_bound(delta_omega, F_pi);
  });
}

renq_status renq_optimize_pi_pulse(double eps, double dw, int full_model, double* T_pi, double* omega0, double* T,
                                   double* max_error) {
  return guarded([&] {
    renq::OptimizerSettings s;
    s.model = full_model ? renq::ErrorModel::full : renq::ErrorModel::first_order;
    const auto r = renq::optimize_pi_pulse(eps, dw, s);
    if (T_pi) *T_pi = r.T_pi;
    if (omega0) *omega0 = r.omega0;
    if (T) *T = r.T;
    if (max_error) *max_error = r.max_error;
  });
}

renq_status renq_min_gate_fidelity(int dim, const double* a, const double* b, double* out) {
  return guarded([&] {
    require(a, "u_ideal");
    require(b, "u_exp");
    require(out, "out");
    if (dim < 1) throw renq::InputError("dim must be >= 1");
    renq::ComplexMatrix ua(dim, dim), ub(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const int k = 2 * (i * dim + j);
        ua(i, j) = {a[k], a[k + 1]};
        ub(i, j) = {b[k], b[k + 1]};
      }
    *out = renq::min_gate_fidelity(ua, ub);
  });
}

renq_status renq_symmetry_lookup(const char* group, int* g_perp_zero, int* electric_dipole) {
  return guarded([&] {
    require(group, "point_group");
    const auto r = renq::symmetry_lookup(group);
    if (g_perp_zero) *g_perp_zero = r.allows_g_perp_zero;
    if (electric_dipole) *electric_dipole = r.allows_electric_dipole;
  });
}

renq_status renq_run(const char* config_json, char** out) {
  return guarded([&] {
    require(config_json, "config");
    require(out, "out");
    *out = nullptr;
    const renq::RunConfig c = renq::run_config_from_json(config_json);
    *out = dup(renq::run_to_text(c));
  });
}

}  // extern "C"
