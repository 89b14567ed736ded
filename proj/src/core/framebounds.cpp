#include "core/framebounds.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "core/metaplectic.hpp"
#include "core/parallel.hpp"

namespace gaborlab {

namespace {

constexpr double pi = 3.14159265358979323846;

double round_err(double x) { return std::abs(x - std::llround(x)); }

} // namespace

std::string to_json(const FrameBounds& fb, int indent) {
    nlohmann::ordered_json diag;
    const BoundsDiagnostics& d = fb.diag;
    if (d.truncation_k >= 0) diag["truncation_K"] = d.truncation_k;
    if (d.grid_n >= 0) diag["grid_n"] = d.grid_n;
    if (d.max_imag_residual >= 0.0) diag["max_imag_residual"] = d.max_imag_residual;
    if (d.ring_fraction >= 0.0) diag["ring_fraction"] = d.ring_fraction;
    diag["raw_min"] = d.raw_min;
    if (d.zak_p > 0) {
        diag["zak_p"] = d.zak_p;
        diag["zak_q"] = d.zak_q;
    }
    if (d.fs_radius >= 0.0) diag["radius"] = d.fs_radius;
    if (d.fs_n_test >= 0) diag["n_test"] = d.fs_n_test;
    if (d.lattice_point_count >= 0) diag["lattice_points"] = d.lattice_point_count;
    if (!d.note.empty()) diag["note"] = d.note;

    nlohmann::ordered_json j;
    j["A"] = fb.a;
    j["B"] = fb.b;
    j["method"] = fb.method;
    j["diagnostics"] = diag;
    return j.dump(indent);
}

// ---------------------------------------------------------------------------
// Janssen
// ---------------------------------------------------------------------------

JanssenSeries janssen_series(const SampledWindow& g, double alpha, double beta, int big_k) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("janssen_series: alpha, beta must be > 0");
    if (big_k < 0) throw std::invalid_argument("janssen_series: K must be >= 0");

    JanssenSeries s;
    s.alpha = alpha;
    s.beta = beta;
    s.truncation_k = big_k;
    const int n = 2 * big_k + 1;
    s.coeff.resize(n, n);
    double total = 0.0, ring = 0.0;
    for (int k = -big_k; k <= big_k; ++k) {
        for (int l = -big_k; l <= big_k; ++l) {
            const cplx v = stft(g, g, {k / beta, l / alpha});
            s.coeff(k + big_k, l + big_k) = v;
            const double a = std::abs(v);
            total += a;
            if (std::abs(k) == big_k || std::abs(l) == big_k) ring += a;
        }
    }
    s.total_abs = total;
    s.ring_fraction = total > 0.0 ? ring / total : 1.0;
    return s;
}

cplx series_symbol(const JanssenSeries& series, TFPoint p) {
    const int big_k = series.truncation_k;
    const int n = 2 * big_k + 1;
    std::vector<cplx> ek(static_cast<std::size_t>(n)), el(static_cast<std::size_t>(n));
    for (int k = -big_k; k <= big_k; ++k) {
        ek[static_cast<std::size_t>(k + big_k)] = std::polar(1.0, 2.0 * pi * k * p.omega);
        el[static_cast<std::size_t>(k + big_k)] = std::polar(1.0, 2.0 * pi * k * p.x);
    }
    cplx acc{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        cplx row{0.0, 0.0};
        for (int j = 0; j < n; ++j) row += series.coeff(i, j) * el[static_cast<std::size_t>(j)];
        acc += ek[static_cast<std::size_t>(i)] * row;
    }
    return acc / (series.alpha * series.beta);
}

cplx janssen_symbol(const SampledWindow& g, double alpha, double beta, int big_k, TFPoint p) {
    return series_symbol(janssen_series(g, alpha, beta, big_k), p);
}

namespace {

// Iterated local zoom around a coarse extremum of the (real) symbol. The
// symbol is a trigonometric polynomial, so each level shrinks the bracket
// by 8x; six levels resolve tangential zeros well below 1e-10.
template <typename F>
double refine_extremum(F&& value_at, double x0, double w0, double span_x, double span_w,
                       bool want_min, int levels = 6) {
    double best = value_at(x0, w0);
    double dx = span_x, dw = span_w;
    for (int lev = 0; lev < levels; ++lev) {
        double bx = x0, bw = w0;
        for (int i = -8; i <= 8; ++i) {
            for (int j = -8; j <= 8; ++j) {
                const double x = x0 + i * dx / 8.0;
                const double w = w0 + j * dw / 8.0;
                const double v = value_at(x, w);
                if (want_min ? v < best : v > best) {
                    best = v;
                    bx = x;
                    bw = w;
                }
            }
        }
        x0 = bx;
        w0 = bw;
        dx /= 8.0;
        dw /= 8.0;
    }
    return best;
}

} // namespace

FrameBounds janssen_bounds(const SampledWindow& g, double alpha, double beta, int big_k,
                           int grid_n) {
    if (grid_n < 2) throw std::invalid_argument("janssen_bounds: grid_n must be >= 2");
    const double delta = 1.0 / (alpha * beta);
    if (round_err(delta) > 1e-9 || std::llround(delta) < 1)
        throw HypothesisError("janssen_bounds: (alpha beta)^{-1} is not a positive integer");

    const JanssenSeries series = janssen_series(g, alpha, beta, big_k);
    if (series.ring_fraction > 1e-10)
        throw NumericError("janssen_bounds: truncation certificate failed (ring fraction " +
                           std::to_string(series.ring_fraction) + ")");

    // Dense evaluation over [0,1)^2 via the factorized row transform.
    const int n = 2 * big_k + 1;
    Eigen::MatrixXcd e(n, grid_n);
    for (int k = -big_k; k <= big_k; ++k)
        for (int i = 0; i < grid_n; ++i)
            e(k + big_k, i) = std::polar(1.0, 2.0 * pi * k * (static_cast<double>(i) / grid_n));
    const Eigen::MatrixXcd rows = series.coeff * e;                    // (k, x)
    const Eigen::MatrixXcd symbol = delta * (rows.transpose() * e);    // (x, omega)

    double max_imag = 0.0, vmin = std::numeric_limits<double>::infinity(), vmax = -vmin;
    int min_i = 0, min_j = 0, max_i = 0, max_j = 0;
    for (int i = 0; i < grid_n; ++i) {
        for (int j = 0; j < grid_n; ++j) {
            const cplx v = symbol(i, j);
            max_imag = std::max(max_imag, std::abs(v.imag()));
            if (v.real() < vmin) { vmin = v.real(); min_i = i; min_j = j; }
            if (v.real() > vmax) { vmax = v.real(); max_i = i; max_j = j; }
        }
    }
    if (max_imag >= 1e-8)
        throw NumericError("janssen_bounds: symbol imaginary residual " +
                           std::to_string(max_imag) + " >= 1e-8");

    const auto value_at = [&series](double x, double w) {
        return series_symbol(series, {x, w}).real();
    };
    const double span = 1.0 / grid_n;
    const double raw_min = refine_extremum(value_at, static_cast<double>(min_i) / grid_n,
                                           static_cast<double>(min_j) / grid_n, span, span, true);
    const double raw_max = refine_extremum(value_at, static_cast<double>(max_i) / grid_n,
                                           static_cast<double>(max_j) / grid_n, span, span, false);

    FrameBounds fb;
    fb.a = std::max(0.0, raw_min);
    fb.b = raw_max;
    fb.method = "janssen";
    fb.diag.truncation_k = big_k;
    fb.diag.grid_n = grid_n;
    fb.diag.max_imag_residual = max_imag;
    fb.diag.ring_fraction = series.ring_fraction;
    fb.diag.raw_min = raw_min;
    return fb;
}

// ---------------------------------------------------------------------------
// Zak
// ---------------------------------------------------------------------------

std::optional<std::pair<long, long>> rationalize(double x, long max_den, double tol) {
    if (!(x > 0.0) || !std::isfinite(x)) return std::nullopt;
    long p0 = 1, q0 = 0;
    long p1 = static_cast<long>(std::floor(x)), q1 = 1;
    double frac = x - std::floor(x);
    for (int it = 0; it < 64; ++it) {
        if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol) break;
        if (frac < 1e-15) break;
        const double inv = 1.0 / frac;
        const long a = static_cast<long>(std::floor(inv));
        frac = inv - std::floor(inv);
        const long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    }
    if (q1 >= 1 && p1 >= 0 &&
        std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol)
        return std::make_pair(p1, q1);
    return std::nullopt;
}

namespace {

// Zak transform of the alpha-dilated window,
// Z(tau, nu) = sum_k sqrt(alpha) w(alpha (tau + k)) e^{-2 pi i k nu},
// evaluated through the window's spline. The k range covers the grid extent.
class ZakEvaluator {
public:
    ZakEvaluator(const SampledWindow& w, double alpha)
        : w_(&w), alpha_(alpha), amp_(std::sqrt(alpha)) {
        const int span = static_cast<int>(std::ceil(w.grid().extent() / alpha)) + 1;
        kmin_ = -span;
        kmax_ = span;
    }

    cplx operator()(double tau, double nu) const {
        cplx acc{0.0, 0.0};
        cplx ph = std::polar(1.0, -2.0 * pi * kmin_ * nu);
        const cplx step = std::polar(1.0, -2.0 * pi * nu);
        for (int k = kmin_; k <= kmax_; ++k) {
            const cplx v = w_->value_at(alpha_ * (tau + k));
            if (v != cplx{0.0, 0.0}) acc += v * ph;
            ph *= step;
        }
        return amp_ * acc;
    }

private:
    const SampledWindow* w_;
    double alpha_;
    double amp_;
    int kmin_, kmax_;
};

// p x q symbol Phi_{j,s}(t, nu) =
//   q^{-1/2} e^{-2 pi i (jq/p)(t + s/q)} conj(Z(t + s/q, nu - jq/p))
// on the fundamental domain [0, 1/q) x [0, 1). The sharp bounds are the
// essential extrema of the eigenvalues of Phi* Phi.
struct ZakSymbol {
    long q, p;
    ZakEvaluator zak;

    ZakSymbol(const SampledWindow& w, double alpha, long q_, long p_)
        : q(q_), p(p_), zak(w, alpha) {}

    void fill_phi(double t, double nu, Eigen::MatrixXcd& phi) const {
        phi.resize(p, q);
        for (long j = 0; j < p; ++j) {
            const double ratio = static_cast<double>(j) * q / static_cast<double>(p);
            for (long s = 0; s < q; ++s) {
                const double tau = t + static_cast<double>(s) / static_cast<double>(q);
                phi(j, s) = std::polar(1.0 / std::sqrt(static_cast<double>(q)),
                                       -2.0 * pi * ratio * tau) *
                            std::conj(zak(tau, nu - ratio));
            }
        }
    }

    std::pair<double, double> eigen_range(double t, double nu) const {
        Eigen::MatrixXcd phi;
        fill_phi(t, nu, phi);
        if (q == 1) {
            const double v = phi.squaredNorm();
            return {v, v};
        }
        const Eigen::MatrixXcd h = phi.adjoint() * phi;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
        return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
    }
};

std::pair<long, long> zak_fraction(double alpha, double beta) {
    const auto frac = rationalize(alpha * beta);
    if (!frac)
        throw HypothesisError("zak_bounds: alpha beta is not rational with denominator <= 64");
    const auto [q, p] = *frac; // alpha beta = q/p
    if (q < 1 || p < q)
        throw HypothesisError("zak_bounds: density below 1 (alpha beta > 1) not supported");
    return {q, p};
}

SampledWindow random_probe(Rng& rng, const TimeGrid& grid) {
    const double t0 = rng.uniform(-2.0, 2.0);
    const double xi = rng.uniform(-2.0, 2.0);
    const double gamma = rng.uniform(0.7, 1.5);
    const cplx c0{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const double c1 = rng.uniform(-0.5, 0.5);
    std::vector<cplx> v(static_cast<std::size_t>(grid.n));
    for (int j = 0; j < grid.n; ++j) {
        const double t = grid.t(j);
        v[static_cast<std::size_t>(j)] = (c0 + c1 * t) *
                                         std::exp(-pi * gamma * gamma * (t - t0) * (t - t0)) *
                                         std::polar(1.0, 2.0 * pi * xi * t);
    }
    double nrm = 0.0;
    for (const cplx& x : v) nrm += std::norm(x);
    nrm = std::sqrt(grid.h * nrm);
    for (cplx& x : v) x /= nrm;
    return SampledWindow(grid, std::move(v));
}

} // namespace

FrameBounds zak_bounds(const SampledWindow& g, double alpha, double beta, int grid_n,
                       bool verify) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("zak_bounds: alpha, beta must be > 0");
    if (grid_n < 2) throw std::invalid_argument("zak_bounds: grid_n must be >= 2");
    const auto [q, p] = zak_fraction(alpha, beta);

    const ZakSymbol symbol(g, alpha, q, p);
    const double dt = 1.0 / (q * static_cast<double>(grid_n));
    const double dnu = 1.0 / grid_n;

    // Grid rows evaluate in parallel; the row extrema are combined in row
    // order afterwards, so the located extrema match a sequential scan
    // regardless of GABORLAB_THREADS.
    struct RowExtrema {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        double nu_lo = 0, nu_hi = 0;
    };
    std::vector<RowExtrema> rows(static_cast<std::size_t>(grid_n));
    parallel_for_index(static_cast<std::size_t>(grid_n), [&](std::size_t i) {
        RowExtrema& row = rows[i];
        const double t = static_cast<double>(i) * dt;
        for (int r = 0; r < grid_n; ++r) {
            const double nu = r * dnu;
            const auto [lo, hi] = symbol.eigen_range(t, nu);
            if (lo < row.lo) { row.lo = lo; row.nu_lo = nu; }
            if (hi > row.hi) { row.hi = hi; row.nu_hi = nu; }
        }
    });
    double vmin = std::numeric_limits<double>::infinity(), vmax = -vmin;
    double tmin = 0, numin = 0, tmax = 0, numax = 0;
    for (int i = 0; i < grid_n; ++i) {
        const RowExtrema& row = rows[static_cast<std::size_t>(i)];
        if (row.lo < vmin) { vmin = row.lo; tmin = i * dt; numin = row.nu_lo; }
        if (row.hi > vmax) { vmax = row.hi; tmax = i * dt; numax = row.nu_hi; }
    }
    const double raw_min = refine_extremum(
        [&symbol](double t, double nu) { return symbol.eigen_range(t, nu).first; }, tmin, numin,
        dt, dnu, true);
    const double raw_max = refine_extremum(
        [&symbol](double t, double nu) { return symbol.eigen_range(t, nu).second; }, tmax, numax,
        dt, dnu, false);

    if (verify) {
        Rng rng(0x5eedbeefULL);
        const double resid = zak_quadform_residual(g, alpha, beta, std::min(grid_n, 128), rng, 2);
        if (resid > 1e-4)
            throw NumericError("zak_bounds: oracle-equivalence self-test failed (residual " +
                               std::to_string(resid) + ")");
    }

    FrameBounds fb;
    fb.a = std::max(0.0, raw_min);
    fb.b = raw_max;
    fb.method = "zak";
    fb.diag.grid_n = grid_n;
    fb.diag.zak_p = static_cast<int>(p);
    fb.diag.zak_q = static_cast<int>(q);
    fb.diag.raw_min = raw_min;
    return fb;
}

double zak_quadform_residual(const SampledWindow& g, double alpha, double beta, int grid_n,
                             Rng& rng, int n_funcs, double radius) {
    const auto fraction = zak_fraction(alpha, beta);
    const long q = fraction.first, p = fraction.second;
    const ZakSymbol symbol(g, alpha, q, p);
    const Lattice lat = Lattice::separable(alpha, beta);
    const auto pts = lat.enumerate(radius);

    const double dt = 1.0 / (q * static_cast<double>(grid_n));
    const double dnu = 1.0 / grid_n;
    double worst = 0.0;
    for (int fi = 0; fi < n_funcs; ++fi) {
        const SampledWindow f = random_probe(rng, g.grid());
        const ZakEvaluator zf(f, alpha);
        // per-row partial sums, combined in row order (thread-count stable)
        std::vector<double> row_sum(static_cast<std::size_t>(grid_n), 0.0);
        parallel_for_index(static_cast<std::size_t>(grid_n), [&](std::size_t i) {
            Eigen::MatrixXcd phi;
            Eigen::VectorXcd fvec(q);
            const double t = static_cast<double>(i) * dt;
            double acc = 0.0;
            for (int r = 0; r < grid_n; ++r) {
                const double nu = r * dnu;
                symbol.fill_phi(t, nu, phi);
                for (long s = 0; s < q; ++s)
                    fvec(s) = zf(t + static_cast<double>(s) / static_cast<double>(q), nu);
                acc += (phi * fvec).squaredNorm();
            }
            row_sum[i] = acc;
        });
        double quad = 0.0;
        for (const double v : row_sum) quad += v;
        quad *= dt * dnu;
        double direct = 0.0;
        for (const Vec& lambda : pts)
            direct += std::norm(stft(f, g, {lambda(0), lambda(1)}));
        worst = std::max(worst, std::abs(quad - direct) / direct);
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Finite section
// ---------------------------------------------------------------------------

FrameBounds finite_section_bounds(const SampledWindow& g, const Lattice& lat, double radius,
                                  int n_test) {
    if (lat.half_dim() != 1) throw DimensionError("finite_section_bounds: d = 1 lattices only");
    if (n_test < 1) throw std::invalid_argument("finite_section_bounds: n_test must be >= 1");
    const TimeGrid& grid = g.grid();
    const int n = grid.n;

    std::vector<SampledWindow> basis;
    basis.reserve(static_cast<std::size_t>(n_test));
    for (int a = 0; a < n_test; ++a) basis.push_back(sample(HermiteSpec{a, 1.0}, grid));

    const auto pts = lat.enumerate(radius);
    // Coefficient vectors <h_a, pi(lambda) g> evaluate in parallel over
    // lattice points; the Gram accumulation stays in point order so the
    // result is independent of GABORLAB_THREADS.
    Eigen::MatrixXcd coeffs(n_test, static_cast<Eigen::Index>(pts.size()));
    parallel_for_index(pts.size(), [&](std::size_t pt) {
        const Vec& lambda = pts[pt];
        const double x = lambda(0), omega = lambda(1);
        // u_j = conj(g(t_j - x)) e^{-2 pi i omega t_j}, shared across the basis
        const double shift = x / grid.h;
        const long long r = std::llround(shift);
        const bool ongrid = std::abs(shift - static_cast<double>(r)) < 1e-9;
        std::vector<cplx> u(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            cplx gv{0.0, 0.0};
            if (ongrid) {
                const long long src = j - r;
                if (src >= 0 && src < n) gv = g[static_cast<int>(src)];
            } else {
                gv = g.value_at(grid.t(j) - x);
            }
            u[static_cast<std::size_t>(j)] =
                gv == cplx{0.0, 0.0}
                    ? cplx{0.0, 0.0}
                    : std::conj(gv) * std::polar(1.0, -2.0 * pi * omega * grid.t(j));
        }
        for (int a = 0; a < n_test; ++a) {
            cplx acc{0.0, 0.0};
            const SampledWindow& b = basis[static_cast<std::size_t>(a)];
            for (int j = 0; j < n; ++j) acc += b[j] * u[static_cast<std::size_t>(j)];
            coeffs(a, static_cast<Eigen::Index>(pt)) = grid.h * acc;
        }
    });
    Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(n_test, n_test);
    for (Eigen::Index pt = 0; pt < coeffs.cols(); ++pt)
        gram += coeffs.col(pt) * coeffs.col(pt).adjoint();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
    FrameBounds fb;
    fb.a = std::max(0.0, es.eigenvalues().minCoeff());
    fb.b = es.eigenvalues().maxCoeff();
    fb.method = "finite_section";
    fb.diag.raw_min = es.eigenvalues().minCoeff();
    fb.diag.fs_radius = radius;
    fb.diag.fs_n_test = n_test;
    fb.diag.lattice_point_count = static_cast<int>(pts.size());
    fb.diag.note = "inner approximation (oracle, not sharp)";
    return fb;
}

// ---------------------------------------------------------------------------
// Reductions and dispatch
// ---------------------------------------------------------------------------

FrameBounds bounds_symplectic(const SampledWindow& g, const SymplecticMatrix& s, double delta,
                              const BoundsConfig& cfg, BoundsMethod method) {
    if (!(delta > 0.0)) throw std::invalid_argument("bounds_symplectic: delta must be > 0");
    if (s.half_dim() != 1) throw DimensionError("bounds_symplectic: d = 1 only");
    if (method == BoundsMethod::finite_section)
        throw std::invalid_argument("bounds_symplectic: finite_section is not a reduction method");

    const SampledWindow deformed = apply_symplectic(g, s.inverse());
    const double ab = std::sqrt(1.0 / delta); // alpha = beta = delta^{-1/2}

    const bool integer_delta = round_err(delta) <= 1e-9 && std::llround(delta) >= 1;
    FrameBounds fb;
    if (method == BoundsMethod::janssen || (method == BoundsMethod::automatic && integer_delta)) {
        try {
            fb = janssen_bounds(deformed, ab, ab, cfg.truncation_k, cfg.grid_n);
            fb.method = "symplectic_reduction+janssen";
            return fb;
        } catch (const NumericError&) {
            if (method == BoundsMethod::janssen) throw;
            // fall through to zak when a janssen certificate fails
        }
    }
    fb = zak_bounds(deformed, ab, ab, cfg.grid_n);
    fb.method = "symplectic_reduction+zak";
    return fb;
}

FrameBounds bounds_for_lattice(const SampledWindow& g, const Lattice& lat,
                               const BoundsConfig& cfg, BoundsMethod method) {
    if (method == BoundsMethod::finite_section)
        return finite_section_bounds(g, lat, cfg.fs_radius, cfg.fs_n_test);

    double alpha = 0.0, beta = 0.0;
    if (lat.diagonal_generator(&alpha, &beta)) {
        const double delta = 1.0 / (alpha * beta);
        const bool integer_delta = round_err(delta) <= 1e-9 && std::llround(delta) >= 1;
        if (method == BoundsMethod::janssen ||
            (method == BoundsMethod::automatic && integer_delta)) {
            try {
                return janssen_bounds(g, alpha, beta, cfg.truncation_k, cfg.grid_n);
            } catch (const NumericError&) {
                if (method == BoundsMethod::janssen) throw;
            }
        }
        if (method == BoundsMethod::zak) return zak_bounds(g, alpha, beta, cfg.grid_n);
        if (rationalize(alpha * beta) && alpha * beta <= 1.0 + 1e-9)
            return zak_bounds(g, alpha, beta, cfg.grid_n);
        return finite_section_bounds(g, lat, cfg.fs_radius, cfg.fs_n_test);
    }
    return bounds_symplectic(g, lat.generator(), lat.density(), cfg, method);
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

namespace {

void require_parity(const SampledWindow& g, Parity want, const char* who) {
    const auto [even_d, odd_d] = parity_defect(g);
    const double defect = want == Parity::even ? even_d : odd_d;
    if (defect > 1e-6)
        throw HypothesisError(std::string(who) + ": window parity defect " +
                              std::to_string(defect) + " > 1e-6");
}

} // namespace

double certify_even_critical(const SampledWindow& g, int big_k) {
    require_parity(g, Parity::even, "certify_even_critical");
    return std::abs(janssen_symbol(g, 1.0, 1.0, big_k, {0.5, 0.5}));
}

double certify_odd_critical(const SampledWindow& g, int big_k) {
    require_parity(g, Parity::odd, "certify_odd_critical");
    return std::abs(janssen_symbol(g, 1.0, 1.0, big_k, {0.0, 0.0}));
}

double certify_odd_density2(const SampledWindow& g, int big_k) {
    require_parity(g, Parity::odd, "certify_odd_density2");
    cplx acc{0.0, 0.0};
    for (int k = -big_k; k <= big_k; ++k)
        for (int l = -big_k; l <= big_k; ++l)
            acc += 2.0 * ambiguity(g, g, {2.0 * k, static_cast<double>(l)});
    return std::abs(acc);
}

} // namespace gaborlab
