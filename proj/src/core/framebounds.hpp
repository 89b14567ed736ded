#pragma once
#include <Eigen/Dense>
#include <optional>
#include <string>

#include "core/lattice.hpp"
#include "core/rng.hpp"
#include "core/tfa.hpp"
#include "core/windows.hpp"

namespace gaborlab {

struct BoundsDiagnostics {
    int truncation_k = -1;
    int grid_n = -1;
    double max_imag_residual = -1.0;
    double ring_fraction = -1.0;
    double raw_min = 0.0; // grid minimum before clamping at 0
    int zak_p = 0, zak_q = 0;
    double fs_radius = -1.0;
    int fs_n_test = -1;
    int lattice_point_count = -1;
    std::string note;
};

/// Sharp (or, for finite_section, oracle) frame bounds A <= B with the
/// method that produced them and its residual diagnostics.
struct FrameBounds {
    double a = 0.0;
    double b = 0.0;
    std::string method;
    BoundsDiagnostics diag;
};

/// {"A":..,"B":..,"method":..,"diagnostics":{..}}; indent < 0 -> compact.
std::string to_json(const FrameBounds& fb, int indent = -1);

/// Operational "not a frame": A below 1e-3 of B.
inline bool not_frame(const FrameBounds& fb) { return fb.a < 1e-3 * fb.b; }

struct BoundsConfig {
    int truncation_k = 20;
    int grid_n = 256;
    double fs_radius = 12.0;
    int fs_n_test = 24;
};

enum class BoundsMethod { automatic, janssen, zak, finite_section };

// ---------------------------------------------------------------------------
// Janssen route (integer oversampling)
// ---------------------------------------------------------------------------

/// Truncated coefficient table V_g g(k/beta, l/alpha), |k|,|l| <= K.
struct JanssenSeries {
    Eigen::MatrixXcd coeff; // (2K+1) x (2K+1), index (k + K, l + K)
    double alpha = 1.0, beta = 1.0;
    int truncation_k = 0;
    double total_abs = 0.0;
    double ring_fraction = 0.0; // |k| = K or |l| = K share of total_abs
};

JanssenSeries janssen_series(const SampledWindow& g, double alpha, double beta, int big_k);

/// (alpha beta)^{-1} sum_{k,l} V_g g(k/beta, l/alpha) e^{2 pi i (k omega + l x)}.
cplx series_symbol(const JanssenSeries& series, TFPoint p);
cplx janssen_symbol(const SampledWindow& g, double alpha, double beta, int big_k, TFPoint p);

/// Sharp bounds as extrema of the (real part of the) Janssen symbol over
/// [0,1)^2; requires (alpha beta)^{-1} to be a positive integer within 1e-9
/// and the boundary-ring truncation certificate (< 1e-10 of the total).
FrameBounds janssen_bounds(const SampledWindow& g, double alpha, double beta, int big_k,
                           int grid_n);

// ---------------------------------------------------------------------------
// Matrix-valued Zak route (rational oversampling)
// ---------------------------------------------------------------------------

/// x ~= num/den with den <= max_den and |x - num/den| <= tol.
std::optional<std::pair<long, long>> rationalize(double x, long max_den = 64, double tol = 1e-9);

/// Sharp bounds from the p x q matrix-valued Zak symbol of the frame
/// operator, for alpha beta = q/p with p >= q (density >= 1). When `verify`
/// is set, a two-probe quadratic-form oracle check runs at construction and
/// failures above 1e-4 relative raise NumericError.
FrameBounds zak_bounds(const SampledWindow& g, double alpha, double beta, int grid_n,
                       bool verify = false);

/// Max relative mismatch, over n_funcs random concentrated probes f, between
/// the symbol quadratic form and the truncated frame-operator sum
/// sum_{lambda, ||lambda|| <= radius} |<f, pi(lambda) g>|^2.
double zak_quadform_residual(const SampledWindow& g, double alpha, double beta, int grid_n,
                             Rng& rng, int n_funcs, double radius = 14.0);

// ---------------------------------------------------------------------------
// Finite-section oracle and reductions
// ---------------------------------------------------------------------------

/// Extremal eigenvalues of the frame-operator quadratic form compressed to
/// span{hermite_0..hermite_{n_test-1}} with the lattice sum truncated at
/// `radius`. An inner approximation used as an independent oracle.
FrameBounds finite_section_bounds(const SampledWindow& g, const Lattice& lat, double radius,
                                  int n_test);

/// Bounds of G(g, delta^{-1/2} S Z^2) as bounds of
/// G(S^{-1}-deformed g, delta^{-1/2} Z^2): janssen when delta is an integer
/// (falling back to zak if its certificates fail), zak otherwise.
FrameBounds bounds_symplectic(const SampledWindow& g, const SymplecticMatrix& s, double delta,
                              const BoundsConfig& cfg, BoundsMethod method = BoundsMethod::automatic);

/// Method dispatch for an arbitrary lattice: separable-diagonal lattices go
/// to janssen/zak directly (finite_section as last resort), anything else
/// through the symplectic reduction.
FrameBounds bounds_for_lattice(const SampledWindow& g, const Lattice& lat, const BoundsConfig& cfg,
                               BoundsMethod method = BoundsMethod::automatic);

// ---------------------------------------------------------------------------
// Critical-density certificates
// ---------------------------------------------------------------------------

/// |Janssen symbol at (1/2, 1/2)| for even g on Z^2; ~0 certifies the
/// vanishing lower bound. HypothesisError if g is not even (defect > 1e-6).
double certify_even_critical(const SampledWindow& g, int big_k);

/// |Janssen symbol at (0, 0)| for odd g on Z^2.
double certify_odd_critical(const SampledWindow& g, int big_k);

/// |sum_{|k|,|l|<=K} 2 A_g g(2k, l)| for odd g; ~0 certifies density 2.
double certify_odd_density2(const SampledWindow& g, int big_k);

} // namespace gaborlab
