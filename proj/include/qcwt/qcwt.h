/* SPDX-License-Identifier: Apache-2.0 */
/* Copyright 2026 The qcwt Authors */

/* C interface to the qcwt library. All objects are opaque handles owned by
 * the caller and released with the matching *_free function. Every function
 * returns a qcwt_status; on failure qcwt_last_error() describes the cause
 * (per thread). Quaternion arrays are interleaved q0,q1,q2,q3 per sample,
 * sample (i1, i2) at position i1 * n2 + i2. */

#ifndef QCWT_H
#define QCWT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QCWT_API __declspec(dllexport)
#else
#define QCWT_API __attribute__((visibility("default")))
#endif

typedef enum {
    QCWT_OK = 0,
    QCWT_E_INVALID_ARGUMENT = 1,
    QCWT_E_DOMAIN = 2,
    QCWT_E_GRID_MISMATCH = 3,
    QCWT_E_FORMAT = 4,
    QCWT_E_IO = 5,
    QCWT_E_GUARD_EXCEEDED = 6,
    QCWT_E_ADMISSIBILITY = 7,
    QCWT_E_INTERNAL = 99
} qcwt_status;

typedef enum { QCWT_METHOD_FAST = 0, QCWT_METHOD_DIRECT = 1, QCWT_METHOD_LATTICE = 2 } qcwt_method;

typedef struct qcwt_signal qcwt_signal;
typedef struct qcwt_spectrum qcwt_spectrum;
typedef struct qcwt_wavelet qcwt_wavelet;
typedef struct qcwt_scalogram qcwt_scalogram;

typedef struct {
    uint32_t n1, n2;
    double x0, y0, dx, dy;
} qcwt_grid;

typedef struct {
    double q0, q1, q2, q3;
} qcwt_quat;

typedef struct {
    uint32_t n_scales, n_angles;
    double smin, smax;
    uint32_t stride; /* translations on every stride-th signal sample */
} qcwt_simgrid_params;

typedef struct {
    double c_phi;
    double spread;     /* (max - min) / mean over the probes */
    double tail_ratio;
    int divergent;
    int commutes_with_e2;
} qcwt_admissibility;

typedef struct {
    uint32_t n_scales, n_angles, nb1, nb2;
    double smin, smax;
    qcwt_grid translations;
    qcwt_grid signal;
    int has_c_phi;
    double c_phi;
    double source_norm;
    double energy_deficit;
    int fallback;
    qcwt_method method;
} qcwt_scalogram_desc;

QCWT_API const char* qcwt_version(void);
QCWT_API const char* qcwt_last_error(void);
QCWT_API const char* qcwt_status_name(qcwt_status s);
QCWT_API void qcwt_string_free(char* s);

/* grids: n x n samples spanning [-half, half) */
QCWT_API qcwt_status qcwt_grid_square(uint32_t n, double half, qcwt_grid* out);

/* signals */
QCWT_API qcwt_status qcwt_signal_create(const qcwt_grid* g, const double* q, qcwt_signal** out);
QCWT_API void qcwt_signal_free(qcwt_signal* s);
QCWT_API qcwt_status qcwt_signal_grid(const qcwt_signal* s, qcwt_grid* out);
QCWT_API qcwt_status qcwt_signal_data(const qcwt_signal* s, double* out, size_t len);
QCWT_API qcwt_status qcwt_signal_norm(const qcwt_signal* s, double* out);
QCWT_API qcwt_status qcwt_signal_read(const char* path, qcwt_signal** out);
QCWT_API qcwt_status qcwt_signal_write(const char* path, const qcwt_signal* s);

QCWT_API qcwt_status qcwt_gen_gaussian(const qcwt_grid* g, double width, double cx, double cy, qcwt_signal** out);
QCWT_API qcwt_status qcwt_gen_anisotropic_gaussian(const qcwt_grid* g, double s1, double s2, double angle, double cx,
                                                   double cy, qcwt_signal** out);
QCWT_API qcwt_status qcwt_gen_mexican_hat(const qcwt_grid* g, double width, double cx, double cy, qcwt_signal** out);
QCWT_API qcwt_status qcwt_gen_random_bandlimited(const qcwt_grid* g, uint64_t seed, qcwt_signal** out);
QCWT_API qcwt_status qcwt_gen_impulse(const qcwt_grid* g, double ax, double ay, qcwt_quat value, qcwt_signal** out);

/* two-sided quaternion Fourier transform */
QCWT_API qcwt_status qcwt_qft_forward(const qcwt_signal* f, qcwt_spectrum** out);
QCWT_API qcwt_status qcwt_qft_inverse(const qcwt_spectrum* F, qcwt_signal** out);
QCWT_API void qcwt_spectrum_free(qcwt_spectrum* F);
QCWT_API qcwt_status qcwt_spectrum_grid(const qcwt_spectrum* F, qcwt_grid* out);
QCWT_API qcwt_status qcwt_spectrum_data(const qcwt_spectrum* F, double* out, size_t len);
QCWT_API qcwt_status qcwt_spectrum_read(const char* path, qcwt_spectrum** out);
QCWT_API qcwt_status qcwt_spectrum_write(const char* path, const qcwt_spectrum* F);
QCWT_API qcwt_status qcwt_file_is_spectrum(const char* path, int* out);

/* wavelets: builtin "log" (Laplacian of Gaussian) or "dgauss" (directional) */
QCWT_API qcwt_status qcwt_wavelet_builtin(const char* name, qcwt_wavelet** out);
QCWT_API qcwt_status qcwt_wavelet_from_signal(const qcwt_signal* mother, const char* name, qcwt_wavelet** out);
QCWT_API void qcwt_wavelet_free(qcwt_wavelet* w);
/* Computes and stores C_phi. probe_values and probe_xy (either may be NULL)
 * receive n_probes values C(xi) and 2 * n_probes probe coordinates. Outputs are
 * filled before the check, so a QCWT_E_ADMISSIBILITY result still reports them. */
QCWT_API qcwt_status qcwt_wavelet_admissibility(qcwt_wavelet* w, uint32_t n_probes, qcwt_admissibility* out,
                                                double* probe_values, double* probe_xy);
QCWT_API qcwt_status qcwt_wavelet_c_phi(const qcwt_wavelet* w, double* out);

/* continuous quaternion wavelet transform */
QCWT_API qcwt_status qcwt_analyze(const qcwt_signal* f, const qcwt_wavelet* w, const qcwt_simgrid_params* p,
                                  qcwt_method method, qcwt_scalogram** out);
/* Uses the wavelet's C_phi, or the one stored in the scalogram if the wavelet has none. */
QCWT_API qcwt_status qcwt_synthesize(const qcwt_scalogram* S, const qcwt_wavelet* w, qcwt_signal** out);
QCWT_API qcwt_status qcwt_coefficient(const qcwt_signal* f, const qcwt_wavelet* w, double a, double theta, double b1,
                                      double b2, qcwt_quat* out);
QCWT_API void qcwt_scalogram_free(qcwt_scalogram* S);
QCWT_API qcwt_status qcwt_scalogram_info(const qcwt_scalogram* S, qcwt_scalogram_desc* out);
/* name of the analysing wavelet ("log", "dgauss" or "other"); free with qcwt_string_free */
QCWT_API qcwt_status qcwt_scalogram_wavelet(const qcwt_scalogram* S, char** out);
QCWT_API qcwt_status qcwt_scalogram_data(const qcwt_scalogram* S, double* out, size_t len);
QCWT_API qcwt_status qcwt_scalogram_read(const char* path, qcwt_scalogram** out);
QCWT_API qcwt_status qcwt_scalogram_write(const char* path, const qcwt_scalogram* S);
/* a_index / theta_index < 0 select every slice; rows receives the row count (may be NULL) */
QCWT_API qcwt_status qcwt_scalogram_export_csv(const qcwt_scalogram* S, const char* path, int64_t a_index,
                                               int64_t theta_index, size_t* rows);

/* verification suites: suites is a comma list of qft, wavelet, cqwt, up, all;
 * tolerances is NULL or "name=value,name=value"; format is "csv" or "text".
 * *report is allocated (free with qcwt_string_free). */
QCWT_API qcwt_status qcwt_verify(const char* suites, const char* corpus, const char* tolerances, const char* format,
                                 char** report, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
