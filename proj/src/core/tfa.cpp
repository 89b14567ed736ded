#include "core/tfa.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace gaborlab {

namespace {

constexpr double pi = 3.14159265358979323846;

} // namespace

TFGrid::TFGrid(double x0, double dx, int nx, double omega0, double domega, int nomega)
    : x0_(x0), dx_(dx), omega0_(omega0), domega_(domega), nx_(nx), nomega_(nomega) {
    if (nx < 1 || nomega < 1) throw std::invalid_argument("TFGrid: empty grid");
    if (!(dx > 0.0) || !(domega > 0.0)) throw std::invalid_argument("TFGrid: spacings must be > 0");
    values_.assign(static_cast<std::size_t>(nx) * nomega, cplx{0.0, 0.0});
}

cplx stft(const SampledWindow& f, const SampledWindow& g, TFPoint p) {
    if (!(f.grid() == g.grid())) throw DimensionError("stft: grid mismatch");
    const TimeGrid& grid = f.grid();
    const int n = grid.n;
    const double h = grid.h;

    cplx acc{0.0, 0.0};
    const double shift = p.x / h;
    const long long r = std::llround(shift);
    if (std::abs(shift - static_cast<double>(r)) < 1e-9) {
        if (std::llabs(r) < n) {
            const int j0 = static_cast<int>(std::max(0LL, r));
            const int j1 = static_cast<int>(std::min<long long>(n, n + r));
            for (int j = j0; j < j1; ++j) {
                const cplx gv = g[j - static_cast<int>(r)];
                if (gv == cplx{0.0, 0.0}) continue;
                acc += f[j] * std::conj(gv) * std::polar(1.0, -2.0 * pi * p.omega * grid.t(j));
            }
        }
    } else {
        for (int j = 0; j < n; ++j) {
            const cplx gv = g.value_at(grid.t(j) - p.x);
            if (gv == cplx{0.0, 0.0}) continue;
            acc += f[j] * std::conj(gv) * std::polar(1.0, -2.0 * pi * p.omega * grid.t(j));
        }
    }
    return h * acc;
}

cplx ambiguity(const SampledWindow& f, const SampledWindow& g, TFPoint p) {
    return std::polar(1.0, pi * p.x * p.omega) * stft(f, g, p);
}

cplx wigner(const SampledWindow& f, const SampledWindow& g, TFPoint p) {
    return 2.0 * ambiguity(f, reflect(g), {2.0 * p.x, 2.0 * p.omega});
}

cplx symplectic_ft(const TFGrid& grid, TFPoint p) {
    cplx acc{0.0, 0.0};
    for (int ix = 0; ix < grid.nx(); ++ix) {
        const double xp = grid.x(ix);
        for (int iw = 0; iw < grid.nomega(); ++iw) {
            const double wp = grid.omega(iw);
            acc += grid.at(ix, iw) * std::polar(1.0, 2.0 * pi * (p.x * wp - p.omega * xp));
        }
    }
    return acc * grid.dx() * grid.domega();
}

std::pair<cplx, cplx> poisson_check(const SampledWindow& g, int big_k) {
    if (big_k < 0) throw std::invalid_argument("poisson_check: K must be >= 0");
    const SampledWindow gv = reflect(g);
    cplx sum_w{0.0, 0.0}, sum_a{0.0, 0.0};
    for (int k = -big_k; k <= big_k; ++k) {
        for (int l = -big_k; l <= big_k; ++l) {
            const double kk = k, ll = l;
            sum_w += 2.0 * ambiguity(g, gv, {2.0 * kk, 2.0 * ll});
            sum_a += ambiguity(g, g, {kk, ll});
        }
    }
    return {sum_w, sum_a};
}

TFGrid sample_ambiguity(const SampledWindow& f, const SampledWindow& g, double x0, double x1,
                        double omega0, double omega1, int nx, int nomega) {
    if (nx < 2 || nomega < 2) throw std::invalid_argument("sample_ambiguity: need >= 2 samples per axis");
    TFGrid grid(x0, (x1 - x0) / (nx - 1), nx, omega0, (omega1 - omega0) / (nomega - 1), nomega);
    for (int ix = 0; ix < nx; ++ix)
        for (int iw = 0; iw < nomega; ++iw)
            grid.at(ix, iw) = ambiguity(f, g, {grid.x(ix), grid.omega(iw)});
    return grid;
}

void write_csv(const TFGrid& grid, std::ostream& os) {
    os << "x,omega,re,im\n";
    char buf[160];
    for (int ix = 0; ix < grid.nx(); ++ix) {
        for (int iw = 0; iw < grid.nomega(); ++iw) {
            const cplx v = grid.at(ix, iw);
            std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g\n", grid.x(ix),
                          grid.omega(iw), v.real(), v.imag());
            os << buf;
        }
    }
}

} // namespace gaborlab
