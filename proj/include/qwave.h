#ifndef QWAVE_H
#define QWAVE_H

/* C interface to the qwave library. Every function returns a qw_status;
 * results are written through out-pointers. On failure qw_last_error() holds
 * a message for the calling thread. Handles are opaque and owned by the
 * caller, who releases them with the matching *_free function (NULL is
 * accepted). Strings are returned through caller buffers: pass buf/cap and
 * receive the full length (without the terminator) in *needed; the copy is
 * truncated when cap is too small. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QW_API __declspec(dllexport)
#elif defined(__GNUC__)
#define QW_API __attribute__((visibility("default")))
#else
#define QW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  QW_OK = 0,
  QW_ERR_INVALID_ARGUMENT = 1,
  QW_ERR_NOT_ON_LOCUS = 2,
  QW_ERR_NO_UNDERCOMPRESSIVE = 3,
  QW_ERR_DEGENERATE_AXIS = 4,
  QW_ERR_NO_CONNECTION = 5,
  QW_ERR_NOT_A_SHOCK = 6,
  QW_ERR_NOT_A_SADDLE = 7,
  QW_ERR_NOT_EQUILIBRIUM = 8,
  QW_ERR_DEGENERATE_EQUILIBRIUM = 9,
  QW_ERR_NOT_FOUND = 10,
  QW_ERR_NO_SOLUTION = 11,
  QW_ERR_BLOW_UP = 12,
  QW_ERR_IO = 13,
  QW_ERR_INTERNAL = 99
} qw_status;

typedef struct {
  double u1;
  double u2;
} qw_state;

typedef struct {
  double mu1;
  double mu2;
} qw_viscosity;

QW_API const char* qw_version(void);
QW_API const char* qw_status_string(qw_status status);
/* Message of the most recent failure on this thread ("" if none). */
QW_API const char* qw_last_error(void);

/* ---- closed-form model ------------------------------------------------ */

typedef enum {
  QW_SHOCK_FAST = 0,
  QW_SHOCK_SLOW = 1,
  QW_SHOCK_UNDERCOMPRESSIVE = 2,
  QW_SHOCK_OVERCOMPRESSIVE = 3,
  QW_SHOCK_DEGENERATE = 4,
  QW_SHOCK_NON_EVOLUTIONARY = 5
} qw_shock_kind;

typedef enum { QW_VERDICT_YES = 0, QW_VERDICT_NO = 1, QW_VERDICT_BOUNDARY = 2 } qw_verdict;

typedef enum { QW_BRANCH_HORIZONTAL = 0, QW_BRANCH_DIAGONAL = 1, QW_BRANCH_ANTIDIAGONAL = 2 } qw_branch;

typedef struct {
  qw_state point;
  qw_state direction;
  /* Shock speed along the branch: speed_slope * u1 + speed_offset. */
  double speed_slope;
  double speed_offset;
} qw_hugoniot_branch;

/* Named points of the locus. The has_* flags are 0 when the point does not
 * exist for the given viscosity (only when mu2 < mu1 do D, E, F, G exist). */
typedef struct {
  qw_state A, B, C, H, D, E, F, G;
  int has_D, has_E, has_F, has_G;
} qw_key_points;

QW_API qw_status qw_flux(qw_state u, qw_state* out);
QW_API qw_status qw_characteristic_speeds(qw_state u, double* slow, double* fast);
QW_API qw_status qw_hugoniot(qw_state u_plus, qw_branch branch, qw_hugoniot_branch* out);
QW_API qw_status qw_rh_residual(qw_state u_minus, qw_state u_plus, double W, double* out);
QW_API qw_status qw_shock_speed(qw_state u_minus, qw_state u_plus, double* W);
QW_API qw_status qw_classify_shock(qw_state u_minus, qw_state u_plus, double W, qw_shock_kind* out);
QW_API qw_status qw_structure_exists(qw_state u_minus, qw_state u_plus, double W, qw_viscosity mu,
                                     qw_verdict* out);
/* Node-to-node orbits for an overcompressive shock; QW_ERR_NOT_A_SHOCK for any other kind. */
QW_API qw_status qw_overcompressive_structure_exists(qw_state u_minus, qw_state u_plus, double W, qw_viscosity mu,
                                                     int* exists);
QW_API qw_status qw_undercompressive_speed(qw_state u_plus, qw_viscosity mu, double* W);
QW_API qw_status qw_undercompressive_energy_gap(qw_state u_plus, qw_viscosity mu, double* gap);
QW_API qw_status qw_energy(qw_state u, qw_state u_plus, double W, double* Z);
QW_API qw_status qw_key_points_of(qw_state u_plus, qw_viscosity mu, qw_key_points* out);
QW_API const char* qw_shock_kind_name(qw_shock_kind kind);

/* ---- traveling-wave profiles ------------------------------------------ */

typedef struct qw_profile qw_profile;

/* Heteroclinic orbit u_minus -> u_plus of the profile ODE at speed W.
 * QW_ERR_NOT_FOUND when the shooting finds no connection. */
QW_API qw_status qw_profile_find(qw_state u_minus, qw_state u_plus, double W, qw_viscosity mu, qw_profile** out);
QW_API void qw_profile_free(qw_profile* p);
QW_API qw_status qw_profile_size(const qw_profile* p, size_t* n);
QW_API qw_status qw_profile_sample(const qw_profile* p, size_t i, double* xi, qw_state* u);
QW_API qw_status qw_profile_eval(const qw_profile* p, double xi, qw_state* u);
/* 1 when the connection is a member of a one-parameter family (node to node). */
QW_API qw_status qw_profile_is_family(const qw_profile* p, int* family);
QW_API qw_status qw_profile_write_csv(const qw_profile* p, const char* path);

/* Bisection-measured speed of the ux -> u+ saddle connection. */
QW_API qw_status qw_measure_connection(qw_state u_plus, qw_viscosity mu, double* W_star, double* line_deviation);

/* ---- Riemann problem -------------------------------------------------- */

typedef enum {
  QW_WAVE_FAST_SHOCK = 0,
  QW_WAVE_SLOW_SHOCK = 1,
  QW_WAVE_UNDERCOMPRESSIVE = 2,
  QW_WAVE_JOUGUET = 3,
  QW_WAVE_FAST_RAREFACTION = 4,
  QW_WAVE_SLOW_RAREFACTION = 5,
  QW_WAVE_SPECIAL_RAREFACTION = 6
} qw_wave_kind;

typedef enum {
  QW_REGION_1 = 0,
  QW_REGION_2,
  QW_REGION_3,
  QW_REGION_4,
  QW_REGION_5,
  QW_REGION_6,
  QW_REGION_7,
  QW_REGION_8,
  QW_REGION_1P,
  QW_REGION_2P,
  QW_REGION_3P,
  QW_REGION_4P,
  QW_REGION_DEGENERATE
} qw_region;

typedef struct {
  qw_wave_kind kind;
  qw_state left;
  qw_state right;
  /* Equal for shocks; the fan's speed range otherwise. */
  double theta_min;
  double theta_max;
} qw_wave;

typedef struct qw_riemann qw_riemann;

QW_API qw_status qw_riemann_solve(qw_state left, qw_state right, qw_viscosity mu, qw_riemann** out);
QW_API void qw_riemann_free(qw_riemann* r);
QW_API qw_status qw_riemann_region(const qw_riemann* r, qw_region* region, int* on_boundary);
QW_API qw_status qw_riemann_wave_count(const qw_riemann* r, size_t* n);
QW_API qw_status qw_riemann_wave(const qw_riemann* r, size_t i, qw_wave* out);
QW_API qw_status qw_riemann_sample(const qw_riemann* r, double theta, qw_state* out);
QW_API qw_status qw_riemann_json(const qw_riemann* r, char* buf, size_t cap, size_t* needed);
/* Number of invariant violations of the solution (0 for a valid one). */
QW_API qw_status qw_riemann_validate(const qw_riemann* r, qw_viscosity mu, size_t* violations);
QW_API const char* qw_wave_kind_name(qw_wave_kind kind);
QW_API const char* qw_region_name(qw_region region);
/* Wave sequence of a region, slow side first, e.g. "S1 S2". */
QW_API const char* qw_region_pattern(qw_region region);

/* Region label of every cell of a resolution x resolution grid over
 * [u1_min, u1_max] x [u2_min, u2_max], row-major with u2 increasing by row.
 * labels must hold resolution * resolution entries. */
QW_API qw_status qw_region_map(qw_state right, qw_viscosity mu, double u1_min, double u1_max, double u2_min,
                               double u2_max, int resolution, qw_region* labels);

/* ---- viscous PDE ------------------------------------------------------ */

typedef struct qw_field qw_field;

typedef struct {
  double safety;      /* fraction of the explicit stability limit, in (0, 1] */
  double frame_speed; /* velocity of the computational frame */
} qw_scheme;

QW_API qw_scheme qw_scheme_default(void);
/* Cell width that resolves the viscous scale for characteristic speeds up to max_abs_speed. */
QW_API qw_status qw_resolved_dx(qw_viscosity mu, double max_abs_speed, double* dx);

/* Step between left and right at x = 0, smoothed over width (0 for sharp). */
QW_API qw_status qw_field_riemann(qw_state left, qw_state right, double x_min, double x_max, int cells, double width,
                                  qw_field** out);
QW_API qw_status qw_field_from_values(double x_min, double x_max, int cells, const qw_state* values,
                                      qw_field** out);
QW_API void qw_field_free(qw_field* f);
QW_API qw_status qw_field_size(const qw_field* f, size_t* n);
QW_API qw_status qw_field_get(const qw_field* f, size_t i, double* x, qw_state* u);
QW_API qw_status qw_field_time(const qw_field* f, double* t);
/* Evolves to time t_end. The new field carries the run metadata. */
QW_API qw_status qw_field_evolve(const qw_field* f, qw_viscosity mu, double t_end, const qw_scheme* scheme,
                                 qw_field** out);
QW_API qw_status qw_field_write_csv(const qw_field* f, const char* path);
/* JSON sidecar of the run that produced the field (grid, mu, scheme, dt history). */
QW_API qw_status qw_field_metadata(const qw_field* f, char* buf, size_t cap, size_t* needed);

/* L1 distance at time t between the viscous solution from a sharp step and
 * the exact Riemann solution, on an automatically chosen moving grid. */
QW_API qw_status qw_compare_to_riemann(qw_state left, qw_state right, qw_viscosity mu, double t, double* l1_error);

/* ---- self-checks ------------------------------------------------------ */

/* Runs a named validation suite (or "all"). *passed is 1 when every check
 * passed; the report text is written like other strings. */
QW_API qw_status qw_validate(const char* suite, uint64_t seed, int* passed, char* buf, size_t cap, size_t* needed);
QW_API size_t qw_suite_count(void);
QW_API const char* qw_suite_name(size_t i);

#ifdef __cplusplus
}
#endif

#endif /* QWAVE_H */
