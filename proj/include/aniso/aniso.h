/* C interface to the aniso library. Handles are opaque; every fallible call
 * returns an aniso_status and leaves a message for aniso_last_error() on the
 * calling thread. Strings returned through char** are owned by the caller
 * and released with aniso_string_free. */
#ifndef ANISO_ANISO_H
#define ANISO_ANISO_H

#include <stddef.h>
#include <stdint.h>

#if defined(ANISO_BUILDING_LIBRARY)
#define ANISO_API __attribute__((visibility("default")))
#else
#define ANISO_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aniso_status {
  ANISO_OK = 0,
  ANISO_NOT_EXPANSIVE = 1,
  ANISO_SINGULAR = 2,
  ANISO_UNSUPPORTED_DIMENSION = 3,
  ANISO_INVALID_RATIO = 4,
  ANISO_TRUNCATION_FAILURE = 5,
  ANISO_EMPTY_SAMPLE = 6,
  ANISO_INVALID_EXPONENT = 7,
  ANISO_INVALID_RANGE = 8,
  ANISO_DEGENERATE_PROFILE = 9,
  ANISO_NO_VALID_FREQUENCIES = 10,
  ANISO_BOUNDARY_LEAK = 11,
  ANISO_GRID_TOO_COARSE = 12,
  ANISO_SPECTRAL_LEAK = 13,
  ANISO_THRESHOLD_VIOLATION = 14,
  ANISO_INVALID_ARGUMENT = 15,
  ANISO_PARSE_ERROR = 16,
  ANISO_UNKNOWN_SUITE = 17,
  ANISO_INTERNAL_ERROR = 99
} aniso_status;

typedef struct aniso_geometry aniso_geometry;
typedef struct aniso_measure aniso_measure;

ANISO_API const char* aniso_version(void);
/* "NotExpansive", "ParseError", ... ; "Ok" for ANISO_OK. */
ANISO_API const char* aniso_status_name(aniso_status status);
/* Message of the last failure on this thread, "" if none. */
ANISO_API const char* aniso_last_error(void);
ANISO_API void aniso_string_free(char* s);

/* entries holds dim*dim values in row-major order. series_ratio is the
 * ellipsoid series parameter r, 1 < r < m_minus; 0 selects sqrt(m_minus). */
ANISO_API aniso_status aniso_geometry_create(int dim, const double* entries, double series_ratio,
                                             aniso_geometry** out);
/* {"matrix": [[...]]} */
ANISO_API aniso_status aniso_geometry_from_json(const char* json, double series_ratio,
                                                aniso_geometry** out);
ANISO_API void aniso_geometry_free(aniso_geometry* geometry);
ANISO_API int aniso_geometry_dim(const aniso_geometry* geometry);
ANISO_API aniso_status aniso_geometry_report(const aniso_geometry* geometry, char** json_out);
/* Scale index of x under A (adjoint = 0) or A* (adjoint != 0). */
ANISO_API aniso_status aniso_geometry_scale_index(const aniso_geometry* geometry, int adjoint,
                                                  const double* x, int* out);

/* points holds count*dim coordinates. */
ANISO_API aniso_status aniso_measure_create(const aniso_geometry* geometry, size_t count,
                                            const double* points, const double* weights,
                                            aniso_measure** out);
/* default_seed is used by density blocks that carry no seed. */
ANISO_API aniso_status aniso_measure_from_json(const aniso_geometry* geometry, const char* json,
                                               uint64_t default_seed, aniso_measure** out);
ANISO_API void aniso_measure_free(aniso_measure* measure);
ANISO_API size_t aniso_measure_size(const aniso_measure* measure);

typedef struct aniso_criterion_result {
  double sup_value;
  int argmax_k;
  int interior; /* 0 when the sup sits at an endpoint of the k range */
} aniso_criterion_result;

/* Lattice criterion for 1 <= p < 2, annulus criterion for p >= 2. Either
 * output string may be NULL. */
ANISO_API aniso_status aniso_criterion(const aniso_geometry* geometry, const aniso_measure* measure,
                                       double p, int k_min, int k_max,
                                       aniso_criterion_result* result, char** json_out,
                                       char** csv_out);

ANISO_API size_t aniso_suite_count(void);
ANISO_API const char* aniso_suite_name(size_t index);
/* resolution 0 selects the suite default; matrix_json may be NULL. */
ANISO_API aniso_status aniso_verify(const char* suite, uint64_t seed, int resolution,
                                    const char* matrix_json, int* passed, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* ANISO_ANISO_H */
