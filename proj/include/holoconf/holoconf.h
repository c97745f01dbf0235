// Copyright 2026 The holoconf Authors
// SPDX-License-Identifier: Apache-2.0

/* C interface to the holoconf verification library. */
#ifndef HOLOCONF_HOLOCONF_H
#define HOLOCONF_HOLOCONF_H

#include <stddef.h>
#include <stdint.h>

#if defined(HOLOCONF_BUILDING_LIBRARY)
#define HC_API __attribute__((visibility("default")))
#else
#define HC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,
  HC_INVALID_ARGUMENT = 1,
  HC_DOMAIN = 2,
  HC_SINGULAR = 3,
  HC_POLE = 4,
  HC_UNSUPPORTED = 5,
  HC_STRUCTURE = 6,
  HC_REALIZATION_MISMATCH = 7,
  HC_UNMATCHED_BRACKET = 8,
  HC_IO = 9,
  HC_BUFFER_TOO_SMALL = 10,
  HC_INTERNAL = 99
} hc_status;

typedef enum hc_format { HC_FORMAT_JSON = 0, HC_FORMAT_TEXT = 1 } hc_format;

typedef struct hc_config hc_config;
typedef struct hc_report hc_report;

/* Message for the last failing call on this thread; never NULL. */
HC_API const char* hc_last_error(void);
HC_API const char* hc_status_name(hc_status status);

HC_API hc_config* hc_config_new(void);
HC_API void hc_config_free(hc_config* cfg);
HC_API hc_status hc_config_set_seed(hc_config* cfg, uint64_t seed);
HC_API hc_status hc_config_set_samples(hc_config* cfg, int samples);
HC_API hc_status hc_config_set_tol(hc_config* cfg, double tol);
/* "bicomplex", "charts", "laplace", "algebra", "projective" or "all".
   With no suite added every suite runs. */
HC_API hc_status hc_config_add_suite(hc_config* cfg, const char* name);

HC_API hc_status hc_run(const hc_config* cfg, hc_report** out);
HC_API void hc_report_free(hc_report* report);
HC_API int hc_report_passed(const hc_report* report);
HC_API size_t hc_report_failures(const hc_report* report);
/* The returned string is owned by the report and valid until it is freed. */
HC_API hc_status hc_report_render(hc_report* report, hc_format format, const char** out);

/* kind: "joukowski", "hopf-fibers" or "conformal-flow". */
HC_API hc_status hc_emit_grid(const char* kind, int resolution, const char* path);

/* Tab-separated generator table for a realization ("cartesian", "polar",
   "holographic", "conformal", "upsilon"). Writes at most `size` bytes
   including the terminator; *needed receives the full size. */
HC_API hc_status hc_generator_table(const char* realization, char* buf, size_t size, size_t* needed);

/* v^alpha at a chart point (chart names as above, minus "upsilon"). */
HC_API hc_status hc_solve(const char* chart, double y0, double y1, double alpha_re, double alpha_im, double* out_re,
                          double* out_im);

/* Hopf map of the normalized point; out receives xi1, xi2, xi3. */
HC_API hc_status hc_hopf(const double s[4], double out[3]);

/* Bicomplex product, components ordered (1, i, j, ij). */
HC_API hc_status hc_bicomplex_mul(const double a[4], const double b[4], double out[4]);

#ifdef __cplusplus
}
#endif

#endif /* HOLOCONF_HOLOCONF_H */
