/* C interface to the gfkpp travelling-wave library. */
#ifndef GFKPP_GFKPP_H
#define GFKPP_GFKPP_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(GFKPP_BUILDING)
#    define GFKPP_API __declspec(dllexport)
#  else
#    define GFKPP_API __declspec(dllimport)
#  endif
#else
#  define GFKPP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gfkpp_status {
    GFKPP_OK = 0,
    GFKPP_E_INVALID_ARGUMENT = 1,
    GFKPP_E_DEGENERATE_REACTION = 2,
    GFKPP_E_ASSUMPTION_VIOLATION = 3,
    GFKPP_E_NOT_EQUILIBRIUM = 4,
    GFKPP_E_INVALID_MANIFOLD = 5,
    GFKPP_E_INTEGRATION_FAILURE = 6,
    GFKPP_E_WINDOW_VIOLATION = 7,
    GFKPP_E_PRECONDITION = 8,
    GFKPP_E_WRONG_ORACLE = 9,
    GFKPP_E_BRACKET_FAILURE = 10,
    GFKPP_E_NO_UPPER_BOUND = 11,
    GFKPP_E_NO_TRANSITION = 12,
    GFKPP_E_INSTABILITY = 13,
    GFKPP_E_ALIGNMENT = 14,
    GFKPP_E_NON_FRONT = 15,
    GFKPP_E_PARSE = 16,
    GFKPP_E_IO = 17,
    GFKPP_E_BUFFER_TOO_SMALL = 98,
    GFKPP_E_INTERNAL = 99
} gfkpp_status;

typedef enum gfkpp_case { GFKPP_CASE_A1, GFKPP_CASE_A2, GFKPP_CASE_B, GFKPP_CASE_C1, GFKPP_CASE_C2, GFKPP_CASE_D } gfkpp_case;

typedef enum gfkpp_regime {
    GFKPP_REGIME_HALF_LINE_CLOSED_RIGHT,
    GFKPP_REGIME_HALF_LINE_CLOSED_LEFT,
    GFKPP_REGIME_UNIQUE,
    GFKPP_REGIME_HALF_OPEN_INTERVAL,
    GFKPP_REGIME_HALF_OPEN_INTERVAL_LEFT,
    GFKPP_REGIME_EMPTY
} gfkpp_regime;

typedef enum gfkpp_front { GFKPP_FRONT_NOT_APPLICABLE, GFKPP_FRONT_PULLED, GFKPP_FRONT_PUSHED } gfkpp_front;

typedef enum gfkpp_branch { GFKPP_BRANCH_UNSTABLE, GFKPP_BRANCH_STABLE, GFKPP_BRANCH_FAST_STABLE } gfkpp_branch;

typedef enum gfkpp_outcome { GFKPP_OUTCOME_CONNECT, GFKPP_OUTCOME_OVERSHOOT, GFKPP_OUTCOME_UNDERSHOOT } gfkpp_outcome;

typedef struct gfkpp_speed_set {
    gfkpp_regime regime;
    double c_star;
    double c_secondary; /* valid when has_secondary != 0 */
    int has_secondary;
    int type_b;         /* 0 for TypeA orbits, 1 for TypeB */
    gfkpp_front front;
    int boundary_tie;
} gfkpp_speed_set;

typedef struct gfkpp_grid {
    double x_min;
    double x_max;
    int n_cells;
} gfkpp_grid;

typedef struct gfkpp_species {
    double d;
    double m;
    double r;
} gfkpp_species;

typedef struct gfkpp_model gfkpp_model;
typedef struct gfkpp_config gfkpp_config;
typedef struct gfkpp_trajectory gfkpp_trajectory;
typedef struct gfkpp_frames gfkpp_frames;

/* Errors. The message of the most recent failure on the calling thread. */
GFKPP_API const char* gfkpp_last_error(void);
GFKPP_API const char* gfkpp_status_name(gfkpp_status s);
GFKPP_API const char* gfkpp_case_name(gfkpp_case c);
GFKPP_API const char* gfkpp_regime_name(gfkpp_regime r);
GFKPP_API const char* gfkpp_front_name(gfkpp_front f);
GFKPP_API const char* gfkpp_outcome_name(gfkpp_outcome o);

/* Configuration: flat "key = value" text with [section] prefixes. */
GFKPP_API gfkpp_status gfkpp_config_parse(const char* text, gfkpp_config** out);
GFKPP_API gfkpp_status gfkpp_config_load(const char* path, gfkpp_config** out);
GFKPP_API gfkpp_status gfkpp_config_set(gfkpp_config* cfg, const char* key, const char* value);
/* *found is set to 0 when the key is absent; *out is then untouched. */
GFKPP_API gfkpp_status gfkpp_config_get_number(const gfkpp_config* cfg, const char* key, double* out, int* found);
/* The returned string lives until the key is set again or cfg is freed. */
GFKPP_API gfkpp_status gfkpp_config_get_string(const gfkpp_config* cfg, const char* key, const char** out);
GFKPP_API void gfkpp_config_free(gfkpp_config* cfg);

/* Number formatting and ranges. */
GFKPP_API gfkpp_status gfkpp_format(double v, int digits, char* buf, size_t cap);
/* Comma-separated items, each a number or a:b:step. *count receives the full
   length; GFKPP_E_BUFFER_TOO_SMALL when it exceeds cap. */
GFKPP_API gfkpp_status gfkpp_parse_range(const char* text, double* out, size_t cap, size_t* count);

/* Models. */
GFKPP_API gfkpp_status gfkpp_model_quadratic(double k, double d1, double d2, double m1, double m2, gfkpp_model** out);
GFKPP_API gfkpp_status gfkpp_model_cubic(double k, double p0, double d1, double d2, double m1, double m2,
                                         gfkpp_model** out);
GFKPP_API gfkpp_status gfkpp_model_polynomial(const double* coeffs, size_t n, double d1, double d2, double m1,
                                              double m2, gfkpp_model** out);
GFKPP_API gfkpp_status gfkpp_model_from_config(const gfkpp_config* cfg, gfkpp_model** out);
/* Writes the config text of m; *needed receives the length without the terminator. */
GFKPP_API gfkpp_status gfkpp_model_to_config(const gfkpp_model* m, char* buf, size_t cap, size_t* needed);
GFKPP_API gfkpp_status gfkpp_model_params(const gfkpp_model* m, double* d1, double* d2, double* m1, double* m2);
GFKPP_API gfkpp_status gfkpp_model_roots(const gfkpp_model* m, double* out, size_t cap, size_t* count);
GFKPP_API gfkpp_status gfkpp_model_reaction(const gfkpp_model* m, double p, double* f, double* df);
GFKPP_API gfkpp_status gfkpp_model_sym1(const gfkpp_model* m, gfkpp_model** out);
GFKPP_API gfkpp_status gfkpp_model_sym2(const gfkpp_model* m, gfkpp_model** out);
GFKPP_API void gfkpp_model_free(gfkpp_model* m);

/* Speeds. */
GFKPP_API gfkpp_status gfkpp_classify(const gfkpp_model* m, gfkpp_case* out);
GFKPP_API gfkpp_status gfkpp_speed_type_a(const gfkpp_model* m, gfkpp_speed_set* out);
GFKPP_API gfkpp_status gfkpp_speed_type_b(const gfkpp_model* m, gfkpp_speed_set* out);
GFKPP_API gfkpp_status gfkpp_minimal_speed(const gfkpp_model* m, gfkpp_speed_set* out);
GFKPP_API gfkpp_status gfkpp_closed_form_quadratic(const gfkpp_model* m, gfkpp_speed_set* out);
GFKPP_API gfkpp_status gfkpp_closed_form_cubic(const gfkpp_model* m, gfkpp_speed_set* out, double* zeta);
GFKPP_API gfkpp_status gfkpp_unique_speed_bistable(const gfkpp_model* m, double p3, double p2, double p1,
                                                   gfkpp_speed_set* out);

/* Sweeps over the quadratic family k P (1 - P), D1 = d1, M1 = m1. Per-point
   statuses go to status_out; the call itself fails only on bad arguments.
   jobs = 0 uses the hardware concurrency. */
GFKPP_API gfkpp_status gfkpp_sweep_m2(double k, double d1, double m1, const double* d2s, size_t n_d2,
                                      const double* ms, size_t n_m, unsigned jobs, double* c_out,
                                      gfkpp_front* front_out, gfkpp_status* status_out);
GFKPP_API gfkpp_status gfkpp_transition_scan(double k, double d1, double m1, const double* d2s, size_t n,
                                             unsigned jobs, double* m_trans_out, gfkpp_status* status_out);
GFKPP_API gfkpp_status gfkpp_asymptotic_slope(double k, double d1, double m1, const double* d2s, size_t n,
                                              unsigned jobs, double* k_out, gfkpp_status* status_out);
GFKPP_API gfkpp_status gfkpp_fit_line(const double* x, const double* y, size_t n, double* slope,
                                      double* intercept, double* r_squared);

/* Phase plane. */
GFKPP_API gfkpp_status gfkpp_shoot(const gfkpp_model* m, double c, double p_origin, gfkpp_branch branch,
                                   double p_target, const double* section, gfkpp_outcome* outcome,
                                   gfkpp_trajectory** out);
GFKPP_API size_t gfkpp_trajectory_size(const gfkpp_trajectory* t);
GFKPP_API gfkpp_status gfkpp_trajectory_point(const gfkpp_trajectory* t, size_t i, double* p, double* q);
/* *found is 0 when no section was requested or crossed. */
GFKPP_API gfkpp_status gfkpp_trajectory_section_q(const gfkpp_trajectory* t, double* q, int* found);
/* path "-" writes to standard output. */
GFKPP_API gfkpp_status gfkpp_trajectory_write_csv(const gfkpp_trajectory* t, const char* path);
GFKPP_API void gfkpp_trajectory_free(gfkpp_trajectory* t);
GFKPP_API gfkpp_status gfkpp_section_gap(const gfkpp_model* m, double c, double p3, double p2, double p1,
                                         double* w);
GFKPP_API gfkpp_status gfkpp_separatrix_admissible(const gfkpp_model* m, double c, int* admissible);

/* Simulation. x0 places the smoothed step 1 / (1 + exp((x - x0) / 2dx)). */
GFKPP_API gfkpp_status gfkpp_simulate_step(const gfkpp_model* m, gfkpp_grid grid, double x0, double t_end,
                                           double save_every, gfkpp_frames** out);
GFKPP_API gfkpp_status gfkpp_simulate(const gfkpp_model* m, gfkpp_grid grid, const double* ic, double t_end,
                                      double save_every, gfkpp_frames** out);
GFKPP_API gfkpp_status gfkpp_simulate_two_species(gfkpp_species s1, gfkpp_species s2, gfkpp_grid grid,
                                                  const double* n1, const double* n2, double t_end,
                                                  double save_every, gfkpp_frames** out);
GFKPP_API gfkpp_status gfkpp_smoothed_step(gfkpp_grid grid, double x0, double* out);
GFKPP_API size_t gfkpp_frames_count(const gfkpp_frames* f);
GFKPP_API gfkpp_status gfkpp_frames_time(const gfkpp_frames* f, size_t i, double* t);
/* field 0 is p (or n1 for two-species runs), field 1 is n2. */
GFKPP_API gfkpp_status gfkpp_frames_values(const gfkpp_frames* f, size_t i, int field, const double** data,
                                           size_t* n);
GFKPP_API gfkpp_status gfkpp_front_speed(const gfkpp_frames* f, double level, double window, double* speed,
                                         double* residual);
GFKPP_API gfkpp_status gfkpp_consistency_deviation(const gfkpp_frames* full, const gfkpp_frames* reduced,
                                                   double* deviation);
GFKPP_API gfkpp_status gfkpp_frames_write_csv(const gfkpp_frames* f, const char* path, const char* comment);
GFKPP_API gfkpp_status gfkpp_front_write_csv(const gfkpp_frames* f, double level, double window, const char* path,
                                             const char* comment);
GFKPP_API void gfkpp_frames_free(gfkpp_frames* f);

#ifdef __cplusplus
}
#endif

#endif
