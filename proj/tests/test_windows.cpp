#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/metaplectic.hpp"
#include "core/windows.hpp"

using namespace gaborlab;

namespace {

constexpr double pi = 3.14159265358979323846;

// Direct recurrence oracle for the n-th orthonormal Hermite function at one
// point, duplicated here so the test does not trust the sampling code path.
double hermite_oracle(int n, double t) {
    const double y = std::sqrt(2.0 * pi) * t;
    double prev = 0.0, cur = std::pow(pi, -0.25) * std::exp(-0.5 * y * y);
    for (int k = 0; k < n; ++k) {
        const double next = std::sqrt(2.0 / (k + 1.0)) * y * cur - std::sqrt(k / (k + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace

TEST_CASE("gaussian sampling is unit norm") {
    const SampledWindow g = sample(GaussianSpec{1.0}, default_grid());
    CHECK(std::abs(g.norm() - 1.0) < 1e-10);
    CHECK(g.parity_hint() == Parity::even);
    // peak value 2^{1/4}
    CHECK(std::abs(g[1024]) == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-9));
}

TEST_CASE("hermite_1 is odd and vanishes at zero") {
    const SampledWindow h1 = sample(HermiteSpec{1, 1.0}, default_grid());
    CHECK(h1.parity_hint() == Parity::odd);
    CHECK(std::abs(h1[1024]) == 0.0); // t = 0 exactly on the default grid
    CHECK(std::abs(h1.norm() - 1.0) < 1e-10);
}

TEST_CASE("hermite_3 gamma=2: unit norm, 3 sign changes, matches the recurrence oracle") {
    const TimeGrid grid = default_grid();
    const SampledWindow h3 = sample(HermiteSpec{3, 2.0}, grid);
    CHECK(std::abs(h3.norm() - 1.0) < 1e-10);

    int sign_changes = 0;
    double prev = 0.0;
    for (int j = 0; j < grid.n; ++j) {
        const double v = h3[j].real();
        if (std::abs(v) < 1e-13) continue;
        if (prev != 0.0 && v * prev < 0.0) ++sign_changes;
        prev = v;
    }
    CHECK(sign_changes == 3);

    // normalized sample equals (2 pi)^{1/4} sqrt(gamma) psi_3(sqrt(2 pi) gamma t)
    const int j = 1048; // t = 0.375
    const double expected =
        std::pow(2.0 * pi, 0.25) * std::sqrt(2.0) * hermite_oracle(3, 2.0 * grid.t(j));
    CHECK(h3[j].real() == doctest::Approx(expected).epsilon(1e-8));
}

TEST_CASE("hermite grid orthogonality up to n = 6") {
    const TimeGrid grid = default_grid();
    std::vector<SampledWindow> hs;
    for (int n = 0; n <= 6; ++n) hs.push_back(sample(HermiteSpec{n, 1.0}, grid));
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            if (m == n) continue;
            CHECK(std::abs(inner(hs[m], hs[n])) < 1e-8);
        }
}

TEST_CASE("parity defects") {
    const TimeGrid grid = default_grid();
    const SampledWindow g = sample(GaussianSpec{1.0}, grid);
    const SampledWindow h1 = sample(HermiteSpec{1, 1.0}, grid);

    const auto [ge, go] = parity_defect(g);
    CHECK(ge < 1e-12);
    CHECK(go == doctest::Approx(1.0));

    const auto [he, ho] = parity_defect(h1);
    CHECK(ho < 1e-12);

    // equal-energy mix: distance to either parity subspace is 1/sqrt(2)
    std::vector<cplx> mix(static_cast<std::size_t>(grid.n));
    for (int j = 0; j < grid.n; ++j)
        mix[static_cast<std::size_t>(j)] = (g[j] + h1[j]) / std::sqrt(2.0);
    const auto [me, mo] = parity_defect(SampledWindow(grid, std::move(mix)));
    CHECK(me == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(mo == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("reflect") {
    const TimeGrid grid = default_grid();
    const SampledWindow g = sample(GaussianSpec{1.0}, grid);
    const SampledWindow h1 = sample(HermiteSpec{1, 1.0}, grid);

    CHECK(distance(reflect(reflect(h1)), h1) == 0.0);
    CHECK(distance(reflect(g), g) < 1e-12);

    const SampledWindow rh1 = reflect(h1);
    double acc = 0.0;
    for (int j = 0; j < grid.n; ++j) acc += std::norm(rh1[j] + h1[j]);
    CHECK(std::sqrt(grid.h * acc) < 1e-12); // reflect(h1) = -h1
}

TEST_CASE("oddbump is odd, compactly supported, C^2-normalized") {
    const TimeGrid grid = default_grid();
    const SampledWindow ob = sample(OddBumpSpec{}, grid);
    CHECK(ob.parity_hint() == Parity::odd);
    CHECK(std::abs(ob.norm() - 1.0) < 1e-12);
    for (int j = 0; j < grid.n; ++j)
        if (std::abs(grid.t(j)) > 1.0) CHECK(std::abs(ob[j]) == 0.0);
}

TEST_CASE("s0_diagnostic of the gaussian matches the closed-form integral 2") {
    const SampledWindow g = sample(GaussianSpec{1.0}, default_grid());
    const double v8 = s0_diagnostic(g, 8, 0.25);
    CHECK(std::abs(v8 - 2.0) < 1e-3);
    // doubling K only adds exponentially small tail mass
    const double v16 = s0_diagnostic(g, 16, 0.25);
    CHECK(std::abs(v16 - v8) < 1e-6);
}

TEST_CASE("s0_diagnostic of hermite_1 is finite and K-stable") {
    const SampledWindow h1 = sample(HermiteSpec{1, 1.0}, default_grid());
    const double v8 = s0_diagnostic(h1, 8, 0.25);
    CHECK(std::isfinite(v8));
    CHECK(v8 > 0.0);
    const double v16 = s0_diagnostic(h1, 16, 0.25);
    CHECK(std::abs(v16 - v8) < 1e-6);
}

TEST_CASE("raw samples resample onto a different grid") {
    const TimeGrid fine{4096, 1.0 / 128.0};
    const SampledWindow src = sample(GaussianSpec{1.0}, fine);
    std::vector<cplx> values(src.values().begin(), src.values().end());
    const SampledWindow dst = sample(RawSamplesSpec{fine, values}, default_grid());
    const SampledWindow ref = sample(GaussianSpec{1.0}, default_grid());
    CHECK(distance(dst, ref) < 1e-7);
}

TEST_CASE("window invariants are enforced") {
    CHECK_THROWS(sample(GaussianSpec{-1.0}, default_grid()));
    CHECK_THROWS(SampledWindow(TimeGrid{100, 1.0 / 64}, std::vector<cplx>(100, cplx{1, 0})));
    CHECK_THROWS(SampledWindow(default_grid(),
                               std::vector<cplx>(2048, cplx{0.0, 0.0}))); // zero window
}
