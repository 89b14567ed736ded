#include "core/windows.hpp"

#include <cmath>

#include "core/tfa.hpp"

namespace gaborlab {

namespace {

constexpr double pi = 3.14159265358979323846;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<cplx> normalized(std::vector<cplx> v, double h) {
    double s = 0.0;
    for (const cplx& x : v) s += std::norm(x);
    s = std::sqrt(h * s);
    if (!(s > 0.0) || !std::isfinite(s))
        throw std::invalid_argument("window: zero or non-finite L2 norm");
    for (cplx& x : v) x /= s;
    return v;
}

} // namespace

TimeGrid default_grid() { return TimeGrid{}; }

SampledWindow::SampledWindow(TimeGrid grid, std::vector<cplx> values, Parity parity_hint)
    : grid_(grid), values_(std::move(values)), parity_(parity_hint) {
    if (grid_.n < 16 || !power_of_two(grid_.n))
        throw std::invalid_argument("SampledWindow: n must be a power of two >= 16");
    if (!(grid_.h > 0.0)) throw std::invalid_argument("SampledWindow: h must be > 0");
    if (values_.size() != static_cast<std::size_t>(grid_.n))
        throw DimensionError("SampledWindow: sample count != grid size");

    double s = 0.0;
    for (const cplx& x : values_) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw std::invalid_argument("SampledWindow: non-finite sample");
        s += std::norm(x);
    }
    norm_ = std::sqrt(grid_.h * s);
    if (!(norm_ > 0.0)) throw std::invalid_argument("SampledWindow: zero window");

    std::vector<double> xs(values_.size()), re(values_.size()), im(values_.size());
    for (int j = 0; j < grid_.n; ++j) {
        xs[static_cast<std::size_t>(j)] = grid_.t(j);
        re[static_cast<std::size_t>(j)] = values_[static_cast<std::size_t>(j)].real();
        im[static_cast<std::size_t>(j)] = values_[static_cast<std::size_t>(j)].imag();
    }
    re_ = CubicSpline(xs, re);
    im_ = CubicSpline(std::move(xs), std::move(im));
}

namespace {

SampledWindow sample_gaussian(const GaussianSpec& spec, const TimeGrid& grid) {
    if (!(spec.gamma > 0.0)) throw std::invalid_argument("gaussian: gamma must be > 0");
    std::vector<cplx> v(static_cast<std::size_t>(grid.n));
    const double amp = std::pow(2.0, 0.25) * std::sqrt(spec.gamma);
    for (int j = 0; j < grid.n; ++j) {
        const double t = grid.t(j);
        v[static_cast<std::size_t>(j)] = amp * std::exp(-pi * spec.gamma * spec.gamma * t * t);
    }
    return SampledWindow(grid, normalized(std::move(v), grid.h), Parity::even);
}

// Orthonormal Hermite functions psi_n(y), evaluated through the stable
// normalized three-term recurrence, at y = sqrt(2 pi) gamma t.
SampledWindow sample_hermite(const HermiteSpec& spec, const TimeGrid& grid) {
    if (spec.n < 0) throw std::invalid_argument("hermite: n must be >= 0");
    if (!(spec.gamma > 0.0)) throw std::invalid_argument("hermite: gamma must be > 0");
    std::vector<cplx> v(static_cast<std::size_t>(grid.n));
    for (int j = 0; j < grid.n; ++j) {
        const double y = std::sqrt(2.0 * pi) * spec.gamma * grid.t(j);
        double prev = 0.0;
        double cur = std::pow(pi, -0.25) * std::exp(-0.5 * y * y);
        for (int k = 0; k < spec.n; ++k) {
            const double next =
                std::sqrt(2.0 / (k + 1.0)) * y * cur - std::sqrt(k / (k + 1.0)) * prev;
            prev = cur;
            cur = next;
        }
        v[static_cast<std::size_t>(j)] = cur;
    }
    return SampledWindow(grid, normalized(std::move(v), grid.h),
                         spec.n % 2 == 0 ? Parity::even : Parity::odd);
}

SampledWindow sample_oddbump(const TimeGrid& grid) {
    std::vector<cplx> v(static_cast<std::size_t>(grid.n));
    for (int j = 0; j < grid.n; ++j) {
        const double t = grid.t(j);
        const double u = std::max(0.0, 1.0 - t * t);
        v[static_cast<std::size_t>(j)] = t * u * u * u;
    }
    return SampledWindow(grid, normalized(std::move(v), grid.h), Parity::odd);
}

SampledWindow sample_raw(const RawSamplesSpec& spec, const TimeGrid& grid) {
    SampledWindow src(spec.grid, spec.values, Parity::none);
    if (spec.grid == grid) return src;
    std::vector<cplx> v(static_cast<std::size_t>(grid.n));
    for (int j = 0; j < grid.n; ++j) v[static_cast<std::size_t>(j)] = src.value_at(grid.t(j));
    return SampledWindow(grid, std::move(v), Parity::none);
}

} // namespace

SampledWindow sample(const WindowSpec& spec, const TimeGrid& grid) {
    SampledWindow w = std::visit(
        [&grid](const auto& s) -> SampledWindow {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GaussianSpec>) return sample_gaussian(s, grid);
            else if constexpr (std::is_same_v<T, HermiteSpec>) return sample_hermite(s, grid);
            else if constexpr (std::is_same_v<T, OddBumpSpec>) return sample_oddbump(grid);
            else return sample_raw(s, grid);
        },
        spec);
    if (w.parity_hint() != Parity::none) {
        const auto [even_d, odd_d] = parity_defect(w);
        const double defect = w.parity_hint() == Parity::even ? even_d : odd_d;
        if (defect > 1e-10)
            throw NumericError("sample: family parity defect exceeds 1e-10");
    }
    return w;
}

std::pair<double, double> parity_defect(const SampledWindow& w) {
    const int n = w.grid().n;
    double even_acc = 0.0, odd_acc = 0.0;
    for (int j = 0; j < n; ++j) {
        const cplx v = w[j];
        const cplx vr = w[(n - j) % n]; // value at -t_j; j = 0 pairs with itself
        even_acc += std::norm(v - vr);
        odd_acc += std::norm(v + vr);
    }
    const double scale = 2.0 * w.norm();
    return {std::sqrt(w.grid().h * even_acc) / scale, std::sqrt(w.grid().h * odd_acc) / scale};
}

SampledWindow reflect(const SampledWindow& w) {
    const int n = w.grid().n;
    std::vector<cplx> v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = w[(n - j) % n];
    return SampledWindow(w.grid(), std::move(v), w.parity_hint());
}

double s0_diagnostic(const SampledWindow& w, int big_k, double step) {
    if (big_k < 1) throw std::invalid_argument("s0_diagnostic: K must be >= 1");
    if (!(step > 0.0)) throw std::invalid_argument("s0_diagnostic: step must be > 0");
    const int n = std::max(1, static_cast<int>(std::llround(2.0 * big_k / step)));
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = -big_k + (i + 0.5) * step;
        for (int j = 0; j < n; ++j) {
            const double omega = -big_k + (j + 0.5) * step;
            acc += std::abs(stft(w, w, {x, omega}));
        }
    }
    return acc * step * step;
}

} // namespace gaborlab
