#ifndef WFP_WFP_H
#define WFP_WFP_H

/*
 * C interface to the wfp toolkit: Poisson bivectors on R^4 built from a
 * pair of Casimir functions, exact Poisson checks, and numeric leaf
 * geometry.
 *
 * Every object is an opaque handle released with its matching *_free
 * function. Strings returned through char** are heap allocated and must be
 * released with wfp_string_free. Functions return WFP_OK on success; on
 * failure wfp_last_error() describes the problem for the calling thread.
 */

#include <stddef.h>

#if defined(WFP_BUILDING_LIBRARY)
#define WFP_API __attribute__((visibility("default")))
#else
#define WFP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wfp_status {
  WFP_OK = 0,
  WFP_ERR_SYNTAX = 1,
  WFP_ERR_OVERFLOW = 2,
  WFP_ERR_INVALID_ARGUMENT = 3,
  WFP_ERR_UNKNOWN_MODEL = 4,
  WFP_ERR_MISSING_PARAMETER = 5,
  WFP_ERR_SINGULAR_POINT = 6,
  WFP_ERR_NOT_IN_IMAGE = 7,
  WFP_ERR_NON_FINITE = 8,
  WFP_ERR_DEGENERATE_CHART = 9,
  WFP_ERR_INTERNAL = 10
} wfp_status;

typedef enum wfp_var { WFP_VAR_X = 0, WFP_VAR_Y = 1, WFP_VAR_Z = 2, WFP_VAR_T = 3 } wfp_var;

/* A point of R^4 together with the value of the move parameter s. */
typedef struct wfp_point {
  double x, y, z, t;
  double s;
} wfp_point;

typedef struct wfp_expr wfp_expr;
typedef struct wfp_bivector wfp_bivector;
typedef struct wfp_trajectory wfp_trajectory;

typedef struct wfp_leaf_form {
  double coefficient; /* <alpha, v> */
  double dual;        /* -<beta, u> */
  int consistent;     /* coefficient and dual agree within 1e-9 */
  double u[4], v[4];
  double alpha[4], beta[4];
} wfp_leaf_form;

WFP_API const char* wfp_version(void);
WFP_API const char* wfp_schema_version(void);
WFP_API const char* wfp_status_name(wfp_status status);
WFP_API const char* wfp_last_error(void);
WFP_API void wfp_string_free(char* s);

/* Expressions: exact polynomials in x, y, z, t and the parameter s. */
WFP_API wfp_status wfp_expr_parse(const char* text, wfp_expr** out);
WFP_API void wfp_expr_free(wfp_expr* e);
WFP_API wfp_status wfp_expr_to_string(const wfp_expr* e, char** out);
WFP_API wfp_status wfp_expr_differentiate(const wfp_expr* e, wfp_var v, wfp_expr** out);
WFP_API wfp_status wfp_expr_evaluate(const wfp_expr* e, const wfp_point* p, double* out);
WFP_API wfp_status wfp_expr_equals(const wfp_expr* a, const wfp_expr* b, int* out);
/* Binds s to an exact rational given as "-1", "3/4" or "0.25". */
WFP_API wfp_status wfp_expr_bind_s(const wfp_expr* e, const char* s, wfp_expr** out);

/* Bivectors. k may be NULL (symbolic conformal factor, 1 in numerics). */
WFP_API wfp_status wfp_bivector_from_casimirs(const wfp_expr* c1, const wfp_expr* c2,
                                              const wfp_expr* k, wfp_bivector** out,
                                              char** warnings);
/* s may be NULL for models that do not use it. */
WFP_API wfp_status wfp_bivector_from_model(const char* model, const char* s, const wfp_expr* k,
                                           wfp_bivector** out);
WFP_API wfp_status wfp_bivector_expected(const char* model, const char* s, wfp_bivector** out);
WFP_API wfp_status wfp_bivector_from_json(const char* json, wfp_bivector** out);
WFP_API void wfp_bivector_free(wfp_bivector* b);
WFP_API wfp_status wfp_bivector_to_json(const wfp_bivector* b, char** out);
WFP_API wfp_status wfp_bivector_component(const wfp_bivector* b, int i, int j, wfp_expr** out);
/* which = 1 or 2; fails when the bivector was not built from Casimirs. */
WFP_API wfp_status wfp_bivector_casimir(const wfp_bivector* b, int which, wfp_expr** out);
WFP_API wfp_status wfp_bivector_equals(const wfp_bivector* a, const wfp_bivector* b, int* out);

WFP_API wfp_status wfp_jacobi_json(const wfp_bivector* b, char** out);
WFP_API wfp_status wfp_is_poisson(const wfp_bivector* b, int* out);
WFP_API wfp_status wfp_casimir_check(const wfp_bivector* b, const wfp_expr* c, int* out);
WFP_API wfp_status wfp_rank_at(const wfp_bivector* b, const wfp_point* p, int* out);
WFP_API wfp_status wfp_hamiltonian_field(const wfp_bivector* b, const wfp_expr* h,
                                         wfp_expr* out[4]);
WFP_API wfp_status wfp_linear_part_json(const wfp_bivector* b, char** out);
/* True when every component of b vanishes at p within 1e-9. */
WFP_API wfp_status wfp_critical_at(const wfp_bivector* b, const wfp_point* p, int* out);

/* Leaves. */
WFP_API wfp_status wfp_solve_anchor(const wfp_bivector* b, const wfp_point* p, const double u[4],
                                    double alpha[4]);
WFP_API wfp_status wfp_leaf_form_euclidean(const wfp_bivector* b, const wfp_point* p,
                                           wfp_leaf_form* out);
WFP_API wfp_status wfp_leaf_form_chart(const wfp_bivector* b, const wfp_point* p, wfp_var a,
                                       wfp_var c, wfp_leaf_form* out);
WFP_API wfp_status wfp_best_chart(const wfp_bivector* b, const wfp_point* p, wfp_var* a,
                                  wfp_var* c);

WFP_API wfp_status wfp_flow(const wfp_bivector* b, const wfp_expr* h, const wfp_point* p0,
                            double dt, int steps, wfp_trajectory** out);
WFP_API void wfp_trajectory_free(wfp_trajectory* tr);
WFP_API size_t wfp_trajectory_length(const wfp_trajectory* tr);
WFP_API wfp_status wfp_trajectory_point(const wfp_trajectory* tr, size_t n, wfp_point* p,
                                        double conserved[3]);
WFP_API wfp_status wfp_trajectory_drift(const wfp_trajectory* tr, double drift[3]);
WFP_API wfp_status wfp_trajectory_to_csv(const wfp_trajectory* tr, char** out);

/* Model catalogue. */
WFP_API wfp_status wfp_catalogue_json(char** out);
/* has_chart is 0 for models without a closed-form leaf coefficient. */
WFP_API wfp_status wfp_model_leaf_chart(const char* model, int* has_chart, wfp_var* a,
                                        wfp_var* c);
WFP_API wfp_status wfp_model_leaf_closed_form(const char* model, const char* s,
                                              const wfp_point* p, double* out);

#ifdef __cplusplus
}
#endif

#endif /* WFP_WFP_H */
