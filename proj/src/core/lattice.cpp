#include "core/lattice.hpp"

#include <cmath>

namespace gaborlab {

Lattice::Lattice(SymplecticMatrix generator, double delta)
    : generator_(std::move(generator)), delta_(delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("Lattice: density must be > 0");
    const int d = generator_.half_dim();
    basis_ = std::pow(delta_, -1.0 / (2.0 * d)) * generator_.entries();
}

Lattice Lattice::separable(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("Lattice::separable: alpha, beta must be > 0");
    // alpha Z x beta Z = delta^{-1/2} M_L Z^2 with L = sqrt(beta/alpha).
    const double delta = 1.0 / (alpha * beta);
    return Lattice(dilation_matrix(std::sqrt(beta / alpha)), delta);
}

bool Lattice::diagonal_generator(double* alpha, double* beta) const {
    if (half_dim() != 1) return false;
    const Mat& s = generator_.entries();
    if (std::abs(s(0, 1)) > 1e-12 || std::abs(s(1, 0)) > 1e-12) return false;
    if (alpha) *alpha = std::abs(basis_(0, 0));
    if (beta) *beta = std::abs(basis_(1, 1));
    return true;
}

std::vector<Vec> Lattice::enumerate(double radius) const {
    if (radius < 0.0) throw std::invalid_argument("Lattice::enumerate: radius must be >= 0");
    const int n = static_cast<int>(basis_.rows());
    // Integer-box bound: ||k|| <= ||basis^{-1}||_2 * radius.
    Eigen::JacobiSVD<Mat> svd(basis_);
    const double sigma_min = svd.singularValues().minCoeff();
    const int box = static_cast<int>(std::ceil(radius / sigma_min + 1e-9));

    const double r2 = radius * radius * (1.0 + 1e-12) + 1e-12;
    std::vector<Vec> points;
    Eigen::VectorXi k = Eigen::VectorXi::Constant(n, -box);
    for (;;) {
        Vec p = basis_ * k.cast<double>();
        if (p.squaredNorm() <= r2) points.push_back(std::move(p));
        // lexicographic odometer
        int i = n - 1;
        while (i >= 0 && k(i) == box) { k(i) = -box; --i; }
        if (i < 0) break;
        ++k(i);
    }
    return points;
}

Lattice from_symplectic(const SymplecticMatrix& s, double delta) { return Lattice(s, delta); }

} // namespace gaborlab
