#include "core/metaplectic.hpp"

#include <cmath>

namespace gaborlab {

namespace {

constexpr double pi = 3.14159265358979323846;

cplx i_pow_half_integer(double e) { return std::polar(1.0, 0.5 * pi * e); } // i^e

} // namespace

SampledWindow apply_fourier(const SampledWindow& w) {
    const TimeGrid& grid = w.grid();
    const int n = grid.n;
    const double h = grid.h;
    const int c = n / 2;
    const cplx phase = i_pow_half_integer(-0.5); // i^{-1/2}, principal branch

    std::vector<cplx> out(static_cast<std::size_t>(n));
    const double inv_h2 = 1.0 / (h * h);
    const long long m_exact = std::llround(inv_h2);
    const bool table_path =
        std::abs(inv_h2 - static_cast<double>(m_exact)) < 1e-9 && m_exact > 0 &&
        m_exact <= (1LL << 24);

    if (table_path) {
        // e^{-2 pi i t_m t_j} = e^{-2 pi i ((m-c)(j-c) mod M)/M} with M = 1/h^2.
        const long long mod = m_exact;
        std::vector<cplx> table(static_cast<std::size_t>(mod));
        for (long long r = 0; r < mod; ++r)
            table[static_cast<std::size_t>(r)] =
                std::polar(1.0, -2.0 * pi * static_cast<double>(r) / static_cast<double>(mod));
        for (int m = 0; m < n; ++m) {
            cplx acc{0.0, 0.0};
            const long long mc = m - c;
            for (int j = 0; j < n; ++j) {
                long long r = (mc * (j - c)) % mod;
                if (r < 0) r += mod;
                acc += w[j] * table[static_cast<std::size_t>(r)];
            }
            out[static_cast<std::size_t>(m)] = phase * h * acc;
        }
    } else {
        for (int m = 0; m < n; ++m) {
            cplx acc{0.0, 0.0};
            const double tm = grid.t(m);
            for (int j = 0; j < n; ++j)
                acc += w[j] * std::polar(1.0, -2.0 * pi * tm * grid.t(j));
            out[static_cast<std::size_t>(m)] = phase * h * acc;
        }
    }
    return SampledWindow(grid, std::move(out), w.parity_hint());
}

SampledWindow apply_dilation(const SampledWindow& w, double scale, int maslov,
                             double* discarded_mass) {
    if (std::abs(scale) < 1e-12)
        throw std::invalid_argument("apply_dilation: |L| < 1e-12");
    const TimeGrid& grid = w.grid();
    const cplx amp = i_pow_half_integer(((maslov % 4) + 4) % 4) * std::sqrt(std::abs(scale));
    std::vector<cplx> out(static_cast<std::size_t>(grid.n));
    for (int j = 0; j < grid.n; ++j)
        out[static_cast<std::size_t>(j)] = amp * w.value_at(scale * grid.t(j));
    SampledWindow result(grid, std::move(out), w.parity_hint());
    if (discarded_mass) {
        const double before = w.norm() * w.norm();
        const double after = result.norm() * result.norm();
        *discarded_mass = std::max(0.0, before - after);
    }
    return result;
}

SampledWindow apply_chirp(const SampledWindow& w, double coeff) {
    const TimeGrid& grid = w.grid();
    std::vector<cplx> out(static_cast<std::size_t>(grid.n));
    for (int j = 0; j < grid.n; ++j) {
        const double t = grid.t(j);
        out[static_cast<std::size_t>(j)] = std::polar(1.0, pi * coeff * t * t) * w[j];
    }
    return SampledWindow(grid, std::move(out), w.parity_hint());
}

SampledWindow apply_chain(const SampledWindow& w, const GeneratorChain& chain) {
    if (chain.d != 1) throw DimensionError("apply_chain: operators implemented for d = 1");
    SampledWindow out = w;
    for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
        out = std::visit(
            [&out](const auto& s) -> SampledWindow {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, FourierStep>) {
                    return apply_fourier(out);
                } else if constexpr (std::is_same_v<T, DilationStep>) {
                    return apply_dilation(out, s.L(0, 0), s.m);
                } else {
                    return apply_chirp(out, s.P(0, 0));
                }
            },
            *it);
    }
    return out;
}

SampledWindow apply_symplectic(const SampledWindow& w, const SymplecticMatrix& s) {
    if (s.half_dim() != 1) throw DimensionError("apply_symplectic: d = 1 only");
    return apply_chain(w, decompose(s));
}

SampledWindow quadratic_fourier(const SampledWindow& w, const QuadraticForm& form, int maslov) {
    if (form.L.rows() != 1) throw DimensionError("quadratic_fourier: d = 1 only");
    SampledWindow out = apply_chirp(w, form.Q(0, 0));
    out = apply_fourier(out);
    out = apply_dilation(out, form.L(0, 0), maslov);
    return apply_chirp(out, form.P(0, 0));
}

cplx quadratic_fourier_kernel(const SampledWindow& w, const QuadraticForm& form, int maslov,
                              double t_out) {
    if (form.L.rows() != 1) throw DimensionError("quadratic_fourier_kernel: d = 1 only");
    const double p = form.P(0, 0), l = form.L(0, 0), q = form.Q(0, 0);
    const TimeGrid& grid = w.grid();
    cplx acc{0.0, 0.0};
    for (int j = 0; j < grid.n; ++j) {
        const double tp = grid.t(j);
        const double wval = 0.5 * p * t_out * t_out - l * t_out * tp + 0.5 * q * tp * tp;
        acc += w[j] * std::polar(1.0, 2.0 * pi * wval);
    }
    return i_pow_half_integer(maslov - 0.5) * std::sqrt(std::abs(l)) * grid.h * acc;
}

double parity_preserved(const SampledWindow& w, const GeneratorChain& chain) {
    if (w.parity_hint() == Parity::none)
        throw HypothesisError("parity_preserved: window has no parity hint");
    const SampledWindow out = apply_chain(w, chain);
    const auto [even_d, odd_d] = parity_defect(out);
    return w.parity_hint() == Parity::even ? even_d : odd_d;
}

cplx inner(const SampledWindow& a, const SampledWindow& b) {
    if (!(a.grid() == b.grid())) throw DimensionError("inner: grid mismatch");
    cplx acc{0.0, 0.0};
    for (int j = 0; j < a.grid().n; ++j) acc += a[j] * std::conj(b[j]);
    return a.grid().h * acc;
}

double distance(const SampledWindow& a, const SampledWindow& b) {
    if (!(a.grid() == b.grid())) throw DimensionError("distance: grid mismatch");
    double acc = 0.0;
    for (int j = 0; j < a.grid().n; ++j) acc += std::norm(a[j] - b[j]);
    return std::sqrt(a.grid().h * acc);
}

double phase_aligned_distance(const SampledWindow& a, const SampledWindow& b) {
    const cplx ip = inner(a, b);
    const cplx theta = std::abs(ip) > 0.0 ? ip / std::abs(ip) : cplx{1.0, 0.0};
    double acc = 0.0;
    for (int j = 0; j < a.grid().n; ++j) acc += std::norm(a[j] - theta * b[j]);
    return std::sqrt(a.grid().h * acc);
}

} // namespace gaborlab
