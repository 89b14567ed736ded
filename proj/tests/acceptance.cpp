// Acceptance suite: runs every advertised numerical guarantee at its stated
// tolerance and prints one pass/fail line per criterion. Exit code equals
// the number of failed criteria. Deterministic under the fixed seeds below.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "core/framebounds.hpp"
#include "core/metaplectic.hpp"

using namespace gaborlab;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;
    std::function<Outcome()> run;
};

const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

SampledWindow gauss(double gamma = 1.0) { return sample(GaussianSpec{gamma}, default_grid()); }
SampledWindow hermite(int n) { return sample(HermiteSpec{n, 1.0}, default_grid()); }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// --------------------------------------------------------------------------

Outcome cover_sign() {
    double worst = 0.0;
    for (const WindowSpec& spec :
         {WindowSpec{GaussianSpec{1.0}}, WindowSpec{HermiteSpec{1, 1.0}}}) {
        const SampledWindow w = sample(spec, default_grid());
        SampledWindow out = w;
        for (int i = 0; i < 4; ++i) out = apply_fourier(out);
        double acc = 0.0;
        for (int j = 0; j < w.grid().n; ++j) acc += std::norm(out[j] + w[j]);
        worst = std::max(worst, std::sqrt(w.grid().h * acc) / w.norm());
    }
    return {worst < 1e-8, "max ||J^4 g + g||/||g|| = " + fmt(worst) + " (tol 1e-8)"};
}

Outcome parity_preservation() {
    Rng rng(61);
    const SampledWindow h0 = hermite(0);
    const SampledWindow h1 = hermite(1);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const GeneratorChain chain = random_chain_sp1(rng, rng.uniform_int(1, 6));
        worst = std::max(worst, parity_preserved(h0, chain));
        worst = std::max(worst, parity_preserved(h1, chain));
    }
    return {worst < 1e-5, "50 chains x {hermite0, hermite1}: max defect = " + fmt(worst) +
                              " (tol 1e-5)"};
}

Outcome free_factorization() {
    Rng rng(7001);
    double worst_free = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const SymplecticMatrix s = random_free_sp1(rng);
        const double err =
            (chain_product(free_factor(s)).entries() - s.entries()).cwiseAbs().maxCoeff();
        worst_free = std::max(worst_free, err);
    }
    double worst_dec = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        SymplecticMatrix s = random_sp1(rng);
        if (trial % 2 == 0) {
            // lower-triangular V_P M_L products keep the B block exactly zero
            const double p = rng.uniform(-3.0, 3.0);
            double l = rng.uniform(0.3, 3.0);
            if (rng.coin()) l = -l;
            s = SymplecticMatrix(
                Mat(shear_matrix(p).entries() * dilation_matrix(l).entries()));
        }
        const double err =
            (chain_product(decompose(s)).entries() - s.entries()).cwiseAbs().maxCoeff();
        worst_dec = std::max(worst_dec, err);
    }
    const double worst = std::max(worst_free, worst_dec);
    return {worst < 1e-10, "free: " + fmt(worst_free) + ", decompose(incl. B=0): " +
                               fmt(worst_dec) + " (tol 1e-10)"};
}

Outcome homomorphism_up_to_phase() {
    Rng rng(90210);
    const SampledWindow g = gauss();
    double worst = 0.0;
    for (int pair = 0; pair < 20; ++pair) {
        const SymplecticMatrix s1 = random_sp1(rng);
        const SymplecticMatrix s2 = random_sp1(rng);
        const SampledWindow one = apply_symplectic(g, SymplecticMatrix(Mat(s1.entries() * s2.entries())));
        const SampledWindow two = apply_symplectic(apply_symplectic(g, s2), s1);
        worst = std::max(worst, phase_aligned_distance(one, two));
    }
    return {worst < 1e-4, "20 pairs: max phase-aligned gap = " + fmt(worst) + " (tol 1e-4)"};
}

Outcome quadratic_fourier_two_path() {
    Rng rng(31415);
    const SampledWindow g = gauss();
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const QuadraticForm form(rng.uniform(-2.0, 2.0),
                                 rng.coin() ? rng.uniform(0.5, 2.0) : -rng.uniform(0.5, 2.0),
                                 rng.uniform(-2.0, 2.0));
        const int maslov = rng.uniform_int(0, 3);
        const SampledWindow composed = quadratic_fourier(g, form, maslov);
        for (int k = 0; k < 8; ++k) {
            const int j = g.grid().n / 2 + rng.uniform_int(-192, 192);
            const cplx kernel = quadratic_fourier_kernel(g, form, maslov, g.grid().t(j));
            worst = std::max(worst, std::abs(composed[j] - kernel));
        }
    }
    return {worst < 1e-5, "5 forms x 8 points: max |composition - kernel| = " + fmt(worst) +
                              " (tol 1e-5)"};
}

Outcome janssen_certificates() {
    double worst8 = 0.0;
    worst8 = std::max(worst8, certify_even_critical(gauss(1.0), 20));
    worst8 = std::max(worst8, certify_even_critical(gauss(2.0), 20));
    worst8 = std::max(worst8, certify_even_critical(hermite(2), 20));
    worst8 = std::max(worst8, certify_odd_critical(hermite(1), 20));
    worst8 = std::max(worst8, certify_odd_critical(hermite(3), 20));
    worst8 = std::max(worst8, certify_odd_density2(hermite(1), 20));
    worst8 = std::max(worst8, certify_odd_density2(hermite(3), 20));
    const double bump = certify_odd_critical(sample(OddBumpSpec{}, default_grid()), 20);
    const bool pass = worst8 < 1e-8 && bump < 1e-6;
    return {pass, "gauss/hermite residuals: " + fmt(worst8) + " (tol 1e-8); oddbump: " +
                      fmt(bump) + " (tol 1e-6)"};
}

Outcome poisson_identity() {
    const auto [sum_w, sum_a] = poisson_check(gauss(), 20);
    const double gap = std::abs(sum_w - sum_a);
    return {gap < 1e-8, "|sum W - sum A| = " + fmt(gap) + " (tol 1e-8)"};
}

Outcome method_cross_validation() {
    const SampledWindow g = gauss();
    const FrameBounds ja = janssen_bounds(g, inv_sqrt2, inv_sqrt2, 20, 256);
    const FrameBounds za = zak_bounds(g, inv_sqrt2, inv_sqrt2, 256);
    const double scale = std::max(ja.b, za.b);
    const double gap_a = std::abs(ja.a - za.a) / scale;
    const double gap_b = std::abs(ja.b - za.b) / scale;

    const FrameBounds fs = finite_section_bounds(g, Lattice::separable(inv_sqrt2, inv_sqrt2),
                                                 12.0, 24);
    const double bracket_a = std::abs(fs.a - ja.a) / ja.a;
    const double bracket_b = std::abs(fs.b - ja.b) / ja.b;

    const bool pass = gap_a <= 1e-3 && gap_b <= 1e-3 && bracket_a <= 0.1 && bracket_b <= 0.1;
    return {pass, "janssen-zak rel gaps " + fmt(gap_a) + "/" + fmt(gap_b) +
                      " (tol 1e-3); finite-section brackets " + fmt(bracket_a) + "/" +
                      fmt(bracket_b) + " (tol 0.1)"};
}

Outcome deformation_invariance() {
    Rng rng(246810);
    const SampledWindow g = gauss();
    const BoundsConfig cfg;
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const SymplecticMatrix s = random_sp1(rng);
        const FrameBounds red = bounds_symplectic(g, s, 2.0, cfg);
        const FrameBounds fs = finite_section_bounds(g, Lattice(s, 2.0), 12.0, 24);
        worst = std::max(worst, std::abs(fs.a - red.a) / red.a);
        worst = std::max(worst, std::abs(fs.b - red.b) / red.b);
    }
    return {worst <= 0.1, "5 random S: max reduction-vs-oracle gap = " + fmt(worst) +
                              " (tol 0.1)"};
}

Outcome lyubarskii_nes_extension() {
    Rng rng(13579);
    const BoundsConfig cfg;
    const SampledWindow odd_windows[] = {hermite(1), hermite(3),
                                         sample(OddBumpSpec{}, default_grid())};
    const SampledWindow control = gauss();
    double worst_ratio = 0.0;     // odd windows: want A/B < 1e-3
    double weakest_control = 1.0; // gaussian: want A/B > 1e-2
    for (int n = 1; n <= 3; ++n) {
        const double delta = (n + 1.0) / n;
        for (const SampledWindow& w : odd_windows) {
            for (int trial = 0; trial < 5; ++trial) {
                const FrameBounds fb = bounds_symplectic(w, random_sp1(rng), delta, cfg);
                worst_ratio = std::max(worst_ratio, fb.a / fb.b);
            }
        }
        for (int trial = 0; trial < 2; ++trial) {
            const FrameBounds fb = bounds_symplectic(control, random_sp1(rng), delta, cfg);
            weakest_control = std::min(weakest_control, fb.a / fb.b);
        }
    }
    const bool pass = worst_ratio < 1e-3 && weakest_control > 1e-2;
    return {pass, "odd windows max A/B = " + fmt(worst_ratio) +
                      " (tol 1e-3); gaussian control min A/B = " + fmt(weakest_control) +
                      " (floor 1e-2)"};
}

Outcome zak_oracle_equivalence() {
    Rng rng(8675309);
    const SampledWindow g = gauss();
    double worst = 0.0;
    for (const double ab : {0.5, 2.0 / 3.0, 0.75})
        worst = std::max(worst, zak_quadform_residual(g, 1.0, ab, 256, rng, 10));
    return {worst < 1e-5, "30 probes over 3 densities: max rel mismatch = " + fmt(worst) +
                              " (tol 1e-5)"};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "cover sign J^4 = -id", 5.0, cover_sign},
        {2, "parity preservation", 60.0, parity_preservation},
        {3, "free factorization", 1.0, free_factorization},
        {4, "homomorphism up to phase", 120.0, homomorphism_up_to_phase},
        {5, "quadratic fourier two-path", 60.0, quadratic_fourier_two_path},
        {6, "janssen certificates", 30.0, janssen_certificates},
        {7, "poisson identity", 30.0, poisson_identity},
        {8, "method cross-validation", 120.0, method_cross_validation},
        {9, "deformation invariance", 300.0, deformation_invariance},
        {10, "lyubarskii-nes extension", 600.0, lyubarskii_nes_extension},
        {11, "zak oracle equivalence", 120.0, zak_oracle_equivalence},
    };

    int failures = 0;
    const auto suite_start = std::chrono::steady_clock::now();
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = elapsed < c.time_limit_s;
        const bool pass = outcome.pass && in_time;
        if (!pass) ++failures;
        std::printf("[%s] %2d. %-28s %s [%.1fs, limit %.0fs]\n", pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), outcome.detail.c_str(), elapsed, c.time_limit_s);
        std::fflush(stdout);
    }
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
    std::printf("acceptance: %zu/%zu criteria passed in %.1fs\n", criteria.size() - failures,
                criteria.size(), total);
    return failures;
}
