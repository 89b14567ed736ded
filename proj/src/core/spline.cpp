#include "core/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gaborlab {

CubicSpline::CubicSpline(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    const std::size_t n = xs_.size();
    if (n < 2 || ys_.size() != n)
        throw std::invalid_argument("CubicSpline: need >= 2 matching knots");
    for (std::size_t i = 1; i < n; ++i)
        if (!(xs_[i] > xs_[i - 1]))
            throw std::invalid_argument("CubicSpline: knots must be strictly increasing");

    x0_ = xs_.front();
    h_ = xs_[1] - xs_[0];
    uniform_ = true;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (std::abs((xs_[i + 1] - xs_[i]) - h_) > 1e-12 * std::max(1.0, std::abs(h_))) {
            uniform_ = false;
            break;
        }
    }

    // Natural boundary: second derivatives vanish at both ends.
    m2_.assign(n, 0.0);
    if (n == 2) return;

    const std::size_t m = n - 2; // interior unknowns
    std::vector<double> diag(m), rhs(m), upper(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double hl = xs_[i + 1] - xs_[i];
        const double hr = xs_[i + 2] - xs_[i + 1];
        diag[i] = 2.0 * (hl + hr);
        upper[i] = hr;
        rhs[i] = 6.0 * ((ys_[i + 2] - ys_[i + 1]) / hr - (ys_[i + 1] - ys_[i]) / hl);
    }
    // Thomas algorithm; sub-diagonal equals the previous row's upper value.
    for (std::size_t i = 1; i < m; ++i) {
        const double hl = xs_[i + 1] - xs_[i];
        const double w = hl / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    m2_[m] = rhs[m - 1] / diag[m - 1];
    for (std::size_t i = m - 1; i > 0; --i)
        m2_[i] = (rhs[i - 1] - upper[i - 1] * m2_[i + 1]) / diag[i - 1];
}

double CubicSpline::operator()(double x) const {
    if (xs_.empty() || x < xs_.front() || x > xs_.back()) return 0.0;
    std::size_t i;
    if (uniform_) {
        i = static_cast<std::size_t>(std::max(0.0, std::floor((x - x0_) / h_)));
        if (i >= xs_.size() - 1) i = xs_.size() - 2;
    } else {
        i = static_cast<std::size_t>(
                std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin());
        i = (i == 0) ? 0 : i - 1;
        if (i >= xs_.size() - 1) i = xs_.size() - 2;
    }
    const double hi = xs_[i + 1] - xs_[i];
    const double a = (xs_[i + 1] - x) / hi;
    const double b = (x - xs_[i]) / hi;
    return a * ys_[i] + b * ys_[i + 1] +
           ((a * a * a - a) * m2_[i] + (b * b * b - b) * m2_[i + 1]) * hi * hi / 6.0;
}

} // namespace gaborlab
