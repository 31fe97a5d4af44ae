#ifndef RENQ_H
#define RENQ_H

#include <stddef.h>

#if defined(RENQ_BUILDING_LIBRARY)
#define RENQ_API __attribute__((visibility("default")))
#else
#define RENQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Nonzero values mirror the library's error kinds. */
typedef enum renq_status {
  RENQ_OK = 0,
  RENQ_ERR_INPUT = 1,
  RENQ_ERR_MODEL = 2,
  RENQ_ERR_INFEASIBLE = 3,
  RENQ_ERR_PARSE = 4,
  RENQ_ERR_REGIME = 5,
  RENQ_ERR_DEGENERATE_ENCODING = 6,
  RENQ_ERR_INTERNAL = 100
} renq_status;

typedef struct renq_material renq_material;
typedef struct renq_report renq_report;

typedef enum renq_report_field {
  RENQ_REPORT_TOTAL_TIME = 0, /* s */
  RENQ_REPORT_F_MIN,
  RENQ_REPORT_DOMINANT,       /* channel index: 0 coherence, 1 activation, 2 resonant, 3 off-resonant */
  RENQ_REPORT_T_CNOT,         /* s */
  RENQ_REPORT_T_ACT,          /* s */
  RENQ_REPORT_T_X,            /* s */
  RENQ_REPORT_ECHO_OVERHEAD,  /* s */
  RENQ_REPORT_TIMED_TOTAL_TIME,
  RENQ_REPORT_TIMED_F_MIN,
  RENQ_REPORT_J_DIP,          /* Hz */
  RENQ_REPORT_MU_M,           /* J/T */
  RENQ_REPORT_NUCLEAR_AXIS_ANGLE, /* rad */
  RENQ_REPORT_ASYMMETRY,
  RENQ_REPORT_RABI,           /* rad/s */
  RENQ_REPORT_THETA,          /* rad, field direction used */
  RENQ_REPORT_PHI
} renq_report_field;

RENQ_API const char* renq_version(void);
/* Message of the last failing call on this thread; empty when none. */
RENQ_API const char* renq_last_error(void);
/* Machine-readable JSON error record of the last failing call on this thread. */
RENQ_API const char* renq_last_error_record(void);
RENQ_API void renq_string_free(char* s);

/* Builtin name ("er-yso-site1") or path to a material document. */
RENQ_API renq_status renq_material_load(const char* name_or_path, renq_material** out);
RENQ_API renq_status renq_material_from_json(const char* json, renq_material** out);
RENQ_API renq_status renq_material_to_json(const renq_material* m, char** out);
RENQ_API void renq_material_free(renq_material* m);
RENQ_API renq_status renq_minimum_field(const renq_material* m, double margin, double* out_tesla);

/* CNOT report for two identical ions at separation r (perpendicular to the active moment). */
RENQ_API renq_status renq_cnot_report(const renq_material* m, double r, double B, double theta, double phi,
                                      double B_ac, renq_report** out);
RENQ_API renq_status renq_optimize_angles(const renq_material* m, double r, double B, double B_ac,
                                          renq_report** out);
RENQ_API renq_status renq_report_get(const renq_report* rep, renq_report_field field, double* out);
RENQ_API void renq_report_free(renq_report* rep);

RENQ_API renq_status renq_cnot_time(double j_dip_hz, double* out_seconds);
RENQ_API renq_status renq_stark_detuning(double N, double r, double F_act, double F_cnot, double* out_rad_s);
RENQ_API renq_status renq_activation_rabi_bound(double delta_omega, double F_pi, double* out_rad_s);
/* full_model != 0 selects exact propagation, else the first-order error. Times in 1/delta_omega_min. */
RENQ_API renq_status renq_optimize_pi_pulse(double error_threshold, double delta_omega_min, int full_model,
                                            double* T_pi, double* omega0, double* T, double* max_error);
/* Row-major complex matrices as interleaved (re, im) pairs, dim*dim entries each. */
RENQ_API renq_status renq_min_gate_fidelity(int dim, const double* u_ideal, const double* u_exp, double* out);
RENQ_API renq_status renq_symmetry_lookup(const char* point_group, int* g_perp_zero, int* electric_dipole);

/* Runs one command described by a JSON config ({"command": "cnot-report", "r": "10 nm", ...}).
   On success *out holds the rendered table (free with renq_string_free). */
RENQ_API renq_status renq_run(const char* config_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
