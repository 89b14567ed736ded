#pragma once
#include <Eigen/Dense>
#include <variant>
#include <vector>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace gaborlab {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Standard symplectic matrix J = [[0, I], [-I, 0]] of size 2d x 2d.
Mat standard_j(int d);

/// True iff ||M^T J M - J||_max <= tol. Throws DimensionError for
/// non-square or odd-sided input.
bool is_symplectic(const Mat& m, double tol = 1e-10);

/// Symplectic form sigma(z, z') = x . w' - x' . w for z = (x, w).
double symplectic_form(const Vec& z, const Vec& zp);

/// Real 2d x 2d matrix satisfying S^T J S = J (and det S = 1), validated
/// at construction. Immutable.
class SymplecticMatrix {
public:
    explicit SymplecticMatrix(Mat entries, double tol = 1e-10);

    int half_dim() const { return d_; }
    const Mat& entries() const { return entries_; }

    Mat block_a() const { return entries_.topLeftCorner(d_, d_); }
    Mat block_b() const { return entries_.topRightCorner(d_, d_); }
    Mat block_c() const { return entries_.bottomLeftCorner(d_, d_); }
    Mat block_d() const { return entries_.bottomRightCorner(d_, d_); }

    /// Exact group inverse J^{-1} S^T J (no numerical inversion).
    SymplecticMatrix inverse() const;

private:
    int d_;
    Mat entries_;
};

SymplecticMatrix dilation_matrix(const Mat& scale);           // M_L
SymplecticMatrix dilation_matrix(double scale);               // d = 1
SymplecticMatrix shear_matrix(const Mat& coeff);              // V_P
SymplecticMatrix shear_matrix(double coeff);                  // d = 1
SymplecticMatrix sp1(double a, double b, double c, double d); // row-major 2x2

// ---------------------------------------------------------------------------
// Generator chains
// ---------------------------------------------------------------------------

struct FourierStep {};

struct DilationStep {
    Mat L;
    int m = 0; // Maslov index, phase-only
    DilationStep(Mat scale, int maslov = 0);
    DilationStep(double scale, int maslov = 0);
};

struct ChirpStep {
    Mat P;
    explicit ChirpStep(Mat coeff);
    explicit ChirpStep(double coeff);
};

using GeneratorStep = std::variant<FourierStep, DilationStep, ChirpStep>;

/// Ordered generator steps; operators are applied right-to-left so that the
/// projected matrix is the left-to-right product of the step matrices.
struct GeneratorChain {
    int d = 1;
    std::vector<GeneratorStep> steps;
};

Mat step_matrix(const GeneratorStep& step, int d);
SymplecticMatrix chain_product(const GeneratorChain& chain);

/// Four-step factorization S = V_{DB^-1} M_{B^-1} J V_{B^-1 A} of a free
/// symplectic matrix (|det B| > 1e-10). Throws NotFreeError otherwise.
GeneratorChain free_factor(const SymplecticMatrix& s);

/// Generator chain for an arbitrary symplectic matrix. Free matrices take
/// the free_factor chain; det B = 0 falls back to factoring S J^{-1} (and,
/// if that is not free either, S (J V_Q)^{-1} for sampled symmetric Q).
GeneratorChain decompose(const SymplecticMatrix& s);

// ---------------------------------------------------------------------------
// Quadratic forms W(t,t') = 1/2 P t^2 - L t.t' + 1/2 Q t'^2
// ---------------------------------------------------------------------------

struct QuadraticForm {
    Mat P, L, Q;
    QuadraticForm(Mat p, Mat l, Mat q);
    QuadraticForm(double p, double l, double q);
};

/// Free symplectic matrix generated by W:
/// [[L^-1 Q, L^-1], [P L^-1 Q - L^T, P L^-1]].
SymplecticMatrix free_matrix(const QuadraticForm& w);

// ---------------------------------------------------------------------------
// Randomized sampling (d = 1), shared by the CLI and the test suites
// ---------------------------------------------------------------------------

/// Random chain of `len` generator steps: each slot is Fourier with
/// probability 1/2, a chirp with P ~ U[-2,2] with probability 1/4, else a
/// dilation with |L| ~ U[0.5,2] and random sign.
GeneratorChain random_chain_sp1(Rng& rng, int len);

/// Product of 4 random generator steps.
SymplecticMatrix random_sp1(Rng& rng);

/// random_sp1 conditioned on |det B| >= b_min.
SymplecticMatrix random_free_sp1(Rng& rng, double b_min = 0.05);

} // namespace gaborlab
