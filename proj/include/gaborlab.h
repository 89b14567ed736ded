/* gaborlab C API: sharp Gabor frame bounds on symplectic lattices.
 *
 * All objects are opaque handles created/destroyed through this interface.
 * Every function returns a gabor_status; outputs go through pointers.
 * On failure, gabor_last_error() returns a thread-local message.
 * All operations on distinct handles are safe to call concurrently;
 * handles themselves are immutable after creation (except gabor_rng).
 */
#ifndef GABORLAB_H
#define GABORLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gabor_window gabor_window;
typedef struct gabor_lattice gabor_lattice;
typedef struct gabor_bounds gabor_bounds;
typedef struct gabor_chain gabor_chain;
typedef struct gabor_rng gabor_rng;

typedef enum gabor_status {
    GABOR_OK = 0,
    GABOR_ERR_INVALID = 1,        /* bad argument / precondition */
    GABOR_ERR_PARSE = 2,          /* malformed spec string or file */
    GABOR_ERR_HYPOTHESIS = 3,     /* method hypothesis violated (parity, rationality, ...) */
    GABOR_ERR_NOT_SYMPLECTIC = 4, /* matrix fails S^T J S = J */
    GABOR_ERR_NUMERIC = 5,        /* numerical diagnostic above tolerance */
    GABOR_ERR_INTERNAL = 6
} gabor_status;

typedef enum gabor_method {
    GABOR_METHOD_AUTO = 0,
    GABOR_METHOD_JANSSEN = 1,
    GABOR_METHOD_ZAK = 2,
    GABOR_METHOD_FINITE_SECTION = 3
} gabor_method;

/* Tuning knobs shared by the bounds computations. Initialize with
 * gabor_params_init and override fields as needed. */
typedef struct gabor_params {
    int32_t truncation_k; /* Janssen series truncation (default 20) */
    int32_t grid_n;       /* symbol grid per axis (default 256) */
    double fs_radius;     /* finite-section lattice radius (default 12) */
    int32_t fs_n_test;    /* finite-section Hermite basis size (default 24) */
} gabor_params;

const char* gabor_version(void);
const char* gabor_last_error(void);
void gabor_params_init(gabor_params* params);

/* ------------------------------------------------------------------ */
/* Windows                                                             */
/* ------------------------------------------------------------------ */

/* Spec strings: "gauss:gamma=<v>", "hermite:n=<n>,gamma=<v>", "oddbump",
 * "file:<path>". grid_n = 0 or grid_h = 0 selects the default grid
 * (n = 2048, h = 1/64). grid_n must be a power of two >= 16. */
gabor_status gabor_window_create(const char* spec, int32_t grid_n, double grid_h,
                                 gabor_window** out);
void gabor_window_free(gabor_window* w);
gabor_status gabor_window_parity_defect(const gabor_window* w, double* even_defect,
                                        double* odd_defect);
gabor_status gabor_window_norm(const gabor_window* w, double* norm);

/* ------------------------------------------------------------------ */
/* Lattices                                                            */
/* ------------------------------------------------------------------ */

/* Spec strings: "sq:delta=<v>", "sep:alpha=<a>,beta=<b>",
 * "symp:delta=<v>,S=<a,b,c,d>". */
gabor_status gabor_lattice_create(const char* spec, gabor_lattice** out);
void gabor_lattice_free(gabor_lattice* lat);
gabor_status gabor_lattice_density(const gabor_lattice* lat, double* delta);

/* ------------------------------------------------------------------ */
/* Frame bounds                                                        */
/* ------------------------------------------------------------------ */

gabor_status gabor_bounds_compute(const gabor_window* w, const gabor_lattice* lat,
                                  const gabor_params* params, gabor_method method,
                                  gabor_bounds** out);
/* Bounds of G(g, delta^{-1/2} S Z^2) via the metaplectic reduction;
 * s is row-major 2x2. */
gabor_status gabor_bounds_symplectic(const gabor_window* w, const double s[4], double delta,
                                     const gabor_params* params, gabor_bounds** out);
void gabor_bounds_free(gabor_bounds* b);
gabor_status gabor_bounds_values(const gabor_bounds* b, double* lower, double* upper);
gabor_status gabor_bounds_method(const gabor_bounds* b, char* buf, size_t cap);
/* Serializes {"A","B","method","diagnostics"}. Writes up to cap bytes
 * (NUL-terminated); *needed receives the full length excluding the NUL.
 * indent < 0 -> compact. */
gabor_status gabor_bounds_json(const gabor_bounds* b, int32_t indent, char* buf, size_t cap,
                               size_t* needed);

/* ------------------------------------------------------------------ */
/* Critical-density certificates                                       */
/* ------------------------------------------------------------------ */

gabor_status gabor_certify_even_critical(const gabor_window* w, int32_t truncation_k,
                                         double* residual);
gabor_status gabor_certify_odd_critical(const gabor_window* w, int32_t truncation_k,
                                        double* residual);
gabor_status gabor_certify_odd_density2(const gabor_window* w, int32_t truncation_k,
                                        double* residual);

/* ------------------------------------------------------------------ */
/* Symplectic factorization                                            */
/* ------------------------------------------------------------------ */

/* Generator chain whose matrix product reconstructs s (row-major 2x2). */
gabor_status gabor_decompose(const double s[4], gabor_chain** out);
void gabor_chain_free(gabor_chain* c);
gabor_status gabor_chain_length(const gabor_chain* c, int32_t* len);
/* kind: 0 = fourier, 1 = dilation (param = L, maslov = m), 2 = chirp
 * (param = P). */
gabor_status gabor_chain_step(const gabor_chain* c, int32_t index, int32_t* kind, double* param,
                              int32_t* maslov);
gabor_status gabor_chain_product(const gabor_chain* c, double out[4]);

/* ------------------------------------------------------------------ */
/* Deterministic Sp(1) sampling                                        */
/* ------------------------------------------------------------------ */

gabor_status gabor_rng_create(uint64_t seed, gabor_rng** out);
void gabor_rng_free(gabor_rng* rng);
/* Next random symplectic matrix (product of 4 random generators),
 * row-major 2x2. */
gabor_status gabor_rng_symplectic(gabor_rng* rng, double out[4]);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GABORLAB_H */
