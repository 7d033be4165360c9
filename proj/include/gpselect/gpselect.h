#ifndef GPSELECT_H
#define GPSELECT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GPS_API __declspec(dllexport)
#else
#define GPS_API __attribute__((visibility("default")))
#endif

typedef enum gps_status {
    GPS_OK = 0,
    GPS_ERR_PRECONDITION = 1,
    GPS_ERR_PARSE = 2,
    GPS_ERR_IO = 3,
    GPS_ERR_BUDGET = 4,
    GPS_ERR_OVERFLOW = 5,
    GPS_ERR_CERTIFICATION = 6,
    GPS_ERR_INTERNAL = 7
} gps_status;

typedef struct gps_pointset gps_pointset;

/* Message of the last failed call on this thread ("" if none). */
GPS_API const char* gps_last_error(void);
GPS_API const char* gps_version(void);

/* Strings returned through char** are owned by the caller. */
GPS_API void gps_string_free(char* s);

/* ---- point sets -------------------------------------------------------- */

GPS_API gps_status gps_pointset_parse(const char* text, gps_pointset** out);
GPS_API gps_status gps_pointset_read(const char* path, gps_pointset** out);
GPS_API gps_status gps_pointset_write(const gps_pointset* ps, const char* path);
GPS_API gps_status gps_pointset_format(const gps_pointset* ps, char** text);
/* xy holds n interleaved integer pairs. */
GPS_API gps_status gps_pointset_from_integers(const int64_t* xy, size_t n, gps_pointset** out);
GPS_API size_t gps_pointset_size(const gps_pointset* ps);
/* Coordinates of point i in canonical order as reduced fractions. */
GPS_API gps_status gps_pointset_get(const gps_pointset* ps, size_t i, int64_t* x_num, int64_t* x_den,
                                    int64_t* y_num, int64_t* y_den);
GPS_API void gps_pointset_free(gps_pointset* ps);

/* ---- generators (rationals are passed as "p/q" or integer text) -------- */

GPS_API gps_status gps_generate_grid(int64_t w, int64_t h, gps_pointset** out);
GPS_API gps_status gps_generate_parabola(int64_t n, gps_pointset** out);
GPS_API gps_status gps_generate_sidon(int64_t n, gps_pointset** out);
GPS_API gps_status gps_generate_clusters(int k, int s, uint64_t seed, gps_pointset** out);
GPS_API gps_status gps_generate_annulus_sector(int64_t m, const char* x, gps_pointset** out);
GPS_API gps_status gps_generate_annulus(int64_t m, const char* x, gps_pointset** out);
GPS_API gps_status gps_generate_jarnik(int64_t m, gps_pointset** out);
GPS_API gps_status gps_generate_sample3d(int64_t n, const char* alpha, uint64_t seed, gps_pointset** out);
GPS_API gps_status gps_bernoulli_sample(const gps_pointset* in, const char* prob, uint64_t seed, gps_pointset** out);

/* ---- detectors --------------------------------------------------------- */

typedef struct gps_counts {
    uint64_t n;
    int64_t s_max; /* 0 for fewer than two points */
    uint64_t triples;
    uint64_t trapezoids; /* 0 for fewer than four points */
    uint64_t descending_pairs;
} gps_counts;

GPS_API gps_status gps_count(const gps_pointset* ps, gps_counts* out);

typedef enum gps_property {
    GPS_PROP_GENERAL_POSITION = 0,
    GPS_PROP_DISTINCT_SLOPES = 1,
    GPS_PROP_MONOTONE = 2
} gps_property;

GPS_API gps_status gps_verify(const gps_pointset* ps, gps_property property, int* holds);

/* ---- selectors --------------------------------------------------------- */

typedef enum gps_method {
    GPS_SELECT_GREEDY_GP = 0,
    GPS_SELECT_SAMPLE_GP = 1,
    GPS_SELECT_MONOTONE = 2,
    GPS_SELECT_MONOTONE_GP = 3,
    GPS_SELECT_SLOPES = 4
} gps_method;

typedef struct gps_trace {
    uint64_t sampled;
    uint64_t obstacles;
    uint64_t deletions;
} gps_trace;

/* prob is used by SAMPLE_GP and MONOTONE_GP (NULL means 1/2), c by SLOPES
   (NULL means the pinned default). certificate may be NULL. */
GPS_API gps_status gps_select(const gps_pointset* in, gps_method method, uint64_t seed, const char* prob,
                              const char* c, gps_pointset** out, gps_trace* trace, const char** certificate);
GPS_API gps_status gps_select_annulus(int64_t m, uint64_t seed, const char* c, gps_pointset** out,
                                      gps_trace* trace);
/* color_of (may be NULL) receives the color of each point in canonical
   order and must hold gps_pointset_size(in) entries. */
GPS_API gps_status gps_color(const gps_pointset* in, uint32_t* color_of, size_t* colors_used);

/* ---- exact oracle ------------------------------------------------------ */

typedef enum gps_oracle_kind {
    GPS_ORACLE_MAX_GP = 0,
    GPS_ORACLE_MAX_MONOTONE_GP = 1,
    GPS_ORACLE_MAX_SLOPES = 2
} gps_oracle_kind;

/* max_points == 0 selects the defaults (40 for counting, 24 otherwise);
   max_nodes == 0 selects the default node budget. */
GPS_API gps_status gps_oracle_triples(const gps_pointset* ps, size_t max_points, uint64_t* out);
GPS_API gps_status gps_oracle_trapezoids(const gps_pointset* ps, size_t max_points, uint64_t* out);
GPS_API gps_status gps_oracle_max(const gps_pointset* ps, gps_oracle_kind which, size_t max_points,
                                  uint64_t max_nodes, gps_pointset** out);
GPS_API gps_status gps_oracle_ramsey(const gps_pointset* ps, int s, size_t max_points, uint64_t max_nodes,
                                     int* holds);

/* ---- harness ----------------------------------------------------------- */

/* Runs every experiment in the JSON spec and returns the CSV text. */
GPS_API gps_status gps_experiment_run(const char* spec_json, int with_timing, char** csv);
GPS_API gps_status gps_fit_exponent(const double* n, const double* value, size_t len, double* slope,
                                    double* intercept, double* r_squared);

#ifdef __cplusplus
}
#endif

#endif
