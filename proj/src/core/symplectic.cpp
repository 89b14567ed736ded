#include "core/symplectic.hpp"

#include <cmath>
#include <string>

namespace gaborlab {

namespace {

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

Mat symmetrized(const Mat& m) { return 0.5 * (m + m.transpose()); }

} // namespace

Mat standard_j(int d) {
    if (d < 1) throw DimensionError("standard_j: d must be >= 1");
    Mat j = Mat::Zero(2 * d, 2 * d);
    j.topRightCorner(d, d) = Mat::Identity(d, d);
    j.bottomLeftCorner(d, d) = -Mat::Identity(d, d);
    return j;
}

bool is_symplectic(const Mat& m, double tol) {
    if (m.rows() != m.cols()) throw DimensionError("is_symplectic: matrix not square");
    if (m.rows() % 2 != 0) throw DimensionError("is_symplectic: odd-sided matrix");
    const int d = static_cast<int>(m.rows()) / 2;
    const Mat j = standard_j(d);
    return max_abs(m.transpose() * j * m - j) <= tol;
}

double symplectic_form(const Vec& z, const Vec& zp) {
    if (z.size() != zp.size()) throw DimensionError("symplectic_form: dimension mismatch");
    if (z.size() % 2 != 0) throw DimensionError("symplectic_form: odd-dimensional point");
    const int d = static_cast<int>(z.size()) / 2;
    return z.head(d).dot(zp.tail(d)) - zp.head(d).dot(z.tail(d));
}

SymplecticMatrix::SymplecticMatrix(Mat entries, double tol) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() % 2 != 0 || entries_.rows() == 0)
        throw DimensionError("SymplecticMatrix: need even-sided square matrix");
    d_ = static_cast<int>(entries_.rows()) / 2;
    if (!is_symplectic(entries_, tol))
        throw NotSymplecticError("SymplecticMatrix: S^T J S != J within tolerance");
    if (std::abs(entries_.determinant() - 1.0) > std::max(tol, 1e-9))
        throw NotSymplecticError("SymplecticMatrix: det S != 1 within tolerance");
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    const Mat j = standard_j(d_);
    return SymplecticMatrix(-j * entries_.transpose() * j);
}

SymplecticMatrix dilation_matrix(const Mat& scale) {
    if (scale.rows() != scale.cols() || scale.rows() == 0)
        throw DimensionError("dilation_matrix: L must be square");
    const int d = static_cast<int>(scale.rows());
    Eigen::PartialPivLU<Mat> lu(scale);
    if (std::abs(lu.determinant()) < 1e-12)
        throw std::invalid_argument("dilation_matrix: L is singular");
    Mat m = Mat::Zero(2 * d, 2 * d);
    m.topLeftCorner(d, d) = lu.solve(Mat::Identity(d, d));
    m.bottomRightCorner(d, d) = scale.transpose();
    return SymplecticMatrix(std::move(m));
}

SymplecticMatrix dilation_matrix(double scale) {
    return dilation_matrix(Mat::Constant(1, 1, scale));
}

SymplecticMatrix shear_matrix(const Mat& coeff) {
    if (coeff.rows() != coeff.cols() || coeff.rows() == 0)
        throw DimensionError("shear_matrix: P must be square");
    if (max_abs(coeff - coeff.transpose()) > 1e-12)
        throw std::invalid_argument("shear_matrix: P must be symmetric");
    const int d = static_cast<int>(coeff.rows());
    Mat m = Mat::Identity(2 * d, 2 * d);
    m.bottomLeftCorner(d, d) = coeff;
    return SymplecticMatrix(std::move(m));
}

SymplecticMatrix shear_matrix(double coeff) {
    return shear_matrix(Mat::Constant(1, 1, coeff));
}

SymplecticMatrix sp1(double a, double b, double c, double d) {
    Mat m(2, 2);
    m << a, b, c, d;
    return SymplecticMatrix(std::move(m));
}

DilationStep::DilationStep(Mat scale, int maslov) : L(std::move(scale)), m(maslov) {
    if (L.rows() != L.cols() || L.rows() == 0)
        throw DimensionError("DilationStep: L must be square");
    if (std::abs(L.determinant()) < 1e-12)
        throw std::invalid_argument("DilationStep: |det L| < 1e-12");
    m = ((m % 4) + 4) % 4;
}

DilationStep::DilationStep(double scale, int maslov)
    : DilationStep(Mat::Constant(1, 1, scale), maslov) {}

ChirpStep::ChirpStep(Mat coeff) : P(std::move(coeff)) {
    if (P.rows() != P.cols() || P.rows() == 0)
        throw DimensionError("ChirpStep: P must be square");
    if (max_abs(P - P.transpose()) > 1e-12)
        throw std::invalid_argument("ChirpStep: P must be symmetric");
}

ChirpStep::ChirpStep(double coeff) : ChirpStep(Mat::Constant(1, 1, coeff)) {}

Mat step_matrix(const GeneratorStep& step, int d) {
    return std::visit(
        [d](const auto& s) -> Mat {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FourierStep>) {
                return standard_j(d);
            } else if constexpr (std::is_same_v<T, DilationStep>) {
                if (s.L.rows() != d) throw DimensionError("step_matrix: L size != d");
                return dilation_matrix(s.L).entries();
            } else {
                if (s.P.rows() != d) throw DimensionError("step_matrix: P size != d");
                return shear_matrix(s.P).entries();
            }
        },
        step);
}

SymplecticMatrix chain_product(const GeneratorChain& chain) {
    Mat acc = Mat::Identity(2 * chain.d, 2 * chain.d);
    for (const auto& step : chain.steps) acc = acc * step_matrix(step, chain.d);
    return SymplecticMatrix(std::move(acc));
}

GeneratorChain free_factor(const SymplecticMatrix& s) {
    const int d = s.half_dim();
    const Mat b = s.block_b();
    Eigen::PartialPivLU<Mat> lu(b);
    if (std::abs(lu.determinant()) <= 1e-10)
        throw NotFreeError("free_factor: |det B| <= 1e-10, matrix is not free");
    const Mat b_inv = lu.solve(Mat::Identity(d, d));
    GeneratorChain chain;
    chain.d = d;
    chain.steps.emplace_back(ChirpStep(symmetrized(s.block_d() * b_inv)));
    chain.steps.emplace_back(DilationStep(b_inv, 0));
    chain.steps.emplace_back(FourierStep{});
    chain.steps.emplace_back(ChirpStep(symmetrized(b_inv * s.block_a())));
    return chain;
}

GeneratorChain decompose(const SymplecticMatrix& s) {
    const int d = s.half_dim();
    if (std::abs(s.block_b().determinant()) > 1e-10) return free_factor(s);

    const Mat j = standard_j(d);
    // S = (S J^{-1}) J with J^{-1} = -J.
    {
        SymplecticMatrix t(Mat(-(s.entries() * j)));
        if (std::abs(t.block_b().determinant()) > 1e-10) {
            GeneratorChain chain = free_factor(t);
            chain.steps.emplace_back(FourierStep{});
            return chain;
        }
    }
    // S = (S (J V_Q)^{-1}) J V_Q for sampled symmetric Q; genericity makes
    // the B block invertible after a few attempts. Deterministic sampling
    // keeps decompose a pure function.
    for (int attempt = 0; attempt < 32; ++attempt) {
        Rng rng(0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(attempt));
        Mat q(d, d);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) q(i, k) = rng.uniform(-1.0, 1.0);
        q = symmetrized(q);
        const Mat v_neg_q = shear_matrix(Mat(-q)).entries();
        SymplecticMatrix t(Mat(s.entries() * v_neg_q * (-j)));
        if (std::abs(t.block_b().determinant()) > 1e-10) {
            GeneratorChain chain = free_factor(t);
            chain.steps.emplace_back(FourierStep{});
            chain.steps.emplace_back(ChirpStep(q));
            return chain;
        }
    }
    throw NumericError("decompose: no free factorization found in 32 attempts");
}

QuadraticForm::QuadraticForm(Mat p, Mat l, Mat q)
    : P(std::move(p)), L(std::move(l)), Q(std::move(q)) {
    if (P.rows() != P.cols() || L.rows() != L.cols() || Q.rows() != Q.cols() ||
        P.rows() != L.rows() || P.rows() != Q.rows() || P.rows() == 0)
        throw DimensionError("QuadraticForm: P, L, Q must be square of equal size");
    if (max_abs(P - P.transpose()) > 1e-12 || max_abs(Q - Q.transpose()) > 1e-12)
        throw std::invalid_argument("QuadraticForm: P and Q must be symmetric");
    if (std::abs(L.determinant()) < 1e-12)
        throw std::invalid_argument("QuadraticForm: L is singular");
}

QuadraticForm::QuadraticForm(double p, double l, double q)
    : QuadraticForm(Mat::Constant(1, 1, p), Mat::Constant(1, 1, l), Mat::Constant(1, 1, q)) {}

SymplecticMatrix free_matrix(const QuadraticForm& w) {
    const int d = static_cast<int>(w.L.rows());
    Eigen::PartialPivLU<Mat> lu(w.L);
    const Mat l_inv = lu.solve(Mat::Identity(d, d));
    Mat m(2 * d, 2 * d);
    m.topLeftCorner(d, d) = l_inv * w.Q;
    m.topRightCorner(d, d) = l_inv;
    m.bottomLeftCorner(d, d) = w.P * l_inv * w.Q - w.L.transpose();
    m.bottomRightCorner(d, d) = w.P * l_inv;
    return SymplecticMatrix(std::move(m));
}

GeneratorChain random_chain_sp1(Rng& rng, int len) {
    GeneratorChain chain;
    chain.d = 1;
    for (int i = 0; i < len; ++i) {
        const double u = rng.uniform();
        if (u < 0.5) {
            chain.steps.emplace_back(FourierStep{});
        } else if (u < 0.75) {
            chain.steps.emplace_back(ChirpStep(rng.uniform(-2.0, 2.0)));
        } else {
            const double mag = rng.uniform(0.5, 2.0);
            chain.steps.emplace_back(DilationStep(rng.coin() ? mag : -mag, 0));
        }
    }
    return chain;
}

SymplecticMatrix random_sp1(Rng& rng) {
    // Rejection on the largest singular value keeps the sampled matrices
    // well conditioned: deformed-window bounds collapse like e^{-c sigma^2},
    // which would drown redundant Gaussian systems below the operational
    // frame threshold. sigma_max <= 2 accepts ~70% of raw products.
    for (int attempt = 0; attempt < 256; ++attempt) {
        SymplecticMatrix s = chain_product(random_chain_sp1(rng, 4));
        const double frob2 = s.entries().squaredNorm();
        const double sigma2 = 0.5 * (frob2 + std::sqrt(std::max(0.0, frob2 * frob2 - 4.0)));
        if (sigma2 <= 4.0) return s;
    }
    return chain_product(random_chain_sp1(rng, 4));
}

SymplecticMatrix random_free_sp1(Rng& rng, double b_min) {
    for (;;) {
        SymplecticMatrix s = random_sp1(rng);
        if (std::abs(s.entries()(0, 1)) >= b_min) return s;
    }
}

} // namespace gaborlab
