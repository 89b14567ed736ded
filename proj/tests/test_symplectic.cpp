#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/symplectic.hpp"

using namespace gaborlab;

namespace {

double max_abs_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

Mat mat2(double a, double b, double c, double d) {
    Mat m(2, 2);
    m << a, b, c, d;
    return m;
}

// Independent reconstruction oracle: multiply the factor matrices directly,
// bypassing chain_product.
Mat multiply_steps(const GeneratorChain& chain) {
    Mat acc = Mat::Identity(2 * chain.d, 2 * chain.d);
    for (const auto& s : chain.steps) acc = acc * step_matrix(s, chain.d);
    return acc;
}

} // namespace

TEST_CASE("is_symplectic basics") {
    CHECK(is_symplectic(standard_j(1), 1e-12));
    CHECK(is_symplectic(Mat::Identity(2, 2), 1e-12));
    CHECK_FALSE(is_symplectic(mat2(2, 0, 0, 1), 1e-10)); // det 2
    CHECK_THROWS_AS(is_symplectic(Mat::Identity(3, 3), 1e-10), DimensionError);
}

TEST_CASE("standard_j") {
    const Mat j = standard_j(1);
    CHECK(max_abs_diff(j, mat2(0, 1, -1, 0)) == 0.0);
    CHECK(max_abs_diff(j * j, -Mat::Identity(2, 2)) == 0.0);

    const Mat j2 = standard_j(2);
    CHECK(j2.rows() == 4);
    CHECK(max_abs_diff(j2.topRightCorner(2, 2), Mat::Identity(2, 2)) == 0.0);
    CHECK(is_symplectic(j2, 1e-12));
}

TEST_CASE("dilation_matrix") {
    CHECK(max_abs_diff(dilation_matrix(2.0).entries(), mat2(0.5, 0, 0, 2)) < 1e-15);
    CHECK(max_abs_diff(dilation_matrix(1.0).entries(), Mat::Identity(2, 2)) < 1e-15);

    // random invertible L, d = 2: check S^T J S = J numerically
    Rng rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        Mat l(2, 2);
        do {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) l(i, j) = rng.uniform(-3.0, 3.0);
        } while (std::abs(l.determinant()) < 0.1);
        CHECK(is_symplectic(dilation_matrix(l).entries(), 1e-10));
    }
    CHECK_THROWS(dilation_matrix(0.0));
}

TEST_CASE("shear_matrix") {
    CHECK(max_abs_diff(shear_matrix(0.0).entries(), Mat::Identity(2, 2)) == 0.0);
    CHECK(max_abs_diff(shear_matrix(1.0).entries(), mat2(1, 0, 1, 1)) == 0.0);
    // V_P V_Q = V_{P+Q}
    const Mat lhs = shear_matrix(0.7).entries() * shear_matrix(-1.3).entries();
    CHECK(max_abs_diff(lhs, shear_matrix(0.7 - 1.3).entries()) < 1e-15);
    Mat asym(2, 2);
    asym << 0, 1, 0, 0;
    CHECK_THROWS(shear_matrix(asym));
}

TEST_CASE("symplectic_form") {
    Vec z(2), zp(2);
    z << 1, 0;
    zp << 0, 1;
    CHECK(symplectic_form(z, zp) == doctest::Approx(1.0));
    CHECK(symplectic_form(z, z) == 0.0);

    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const SymplecticMatrix s = random_sp1(rng);
        Vec a(2), b(2);
        a << rng.uniform(-5, 5), rng.uniform(-5, 5);
        b << rng.uniform(-5, 5), rng.uniform(-5, 5);
        const double direct = symplectic_form(a, b);
        const double mapped = symplectic_form(Vec(s.entries() * a), Vec(s.entries() * b));
        CHECK(std::abs(direct - mapped) < 1e-10 * std::max(1.0, std::abs(direct)));
    }
    Vec w(4);
    w.setZero();
    CHECK_THROWS_AS(symplectic_form(z, w), DimensionError);
}

TEST_CASE("free_factor of J is the trivial 4-step chain") {
    const GeneratorChain chain = free_factor(SymplecticMatrix(standard_j(1)));
    REQUIRE(chain.steps.size() == 4);
    CHECK(std::get<ChirpStep>(chain.steps[0]).P(0, 0) == 0.0);
    CHECK(std::get<DilationStep>(chain.steps[1]).L(0, 0) == 1.0);
    CHECK(std::holds_alternative<FourierStep>(chain.steps[2]));
    CHECK(std::get<ChirpStep>(chain.steps[3]).P(0, 0) == 0.0);
    CHECK(max_abs_diff(multiply_steps(chain), standard_j(1)) < 1e-14);
}

TEST_CASE("free_factor reconstructs the upper shear") {
    const SymplecticMatrix s = sp1(1, 1, 0, 1);
    const GeneratorChain chain = free_factor(s);
    CHECK(max_abs_diff(multiply_steps(chain), s.entries()) < 1e-12);
}

TEST_CASE("free_factor rejects non-free input") {
    CHECK_THROWS_AS(free_factor(sp1(1, 0, 1, 1)), NotFreeError);
}

TEST_CASE("decompose delegates to free_factor when B is invertible") {
    Rng rng(11);
    const SymplecticMatrix s = random_free_sp1(rng);
    const GeneratorChain via_decompose = decompose(s);
    const GeneratorChain via_free = free_factor(s);
    REQUIRE(via_decompose.steps.size() == via_free.steps.size());
    CHECK(max_abs_diff(multiply_steps(via_decompose), multiply_steps(via_free)) < 1e-14);
}

TEST_CASE("decompose handles B = 0 through the S J^{-1} route") {
    const SymplecticMatrix s = sp1(1, 0, 1, 1);
    const GeneratorChain chain = decompose(s);
    CHECK(chain.steps.size() <= 8);
    CHECK(max_abs_diff(multiply_steps(chain), s.entries()) < 1e-12);
}

TEST_CASE("decompose reconstructs 100 random Sp(1) products") {
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        // random products of <= 10 generators, dilations kept away from 0
        GeneratorChain gen;
        gen.d = 1;
        const int len = rng.uniform_int(1, 10);
        for (int i = 0; i < len; ++i) {
            const double u = rng.uniform();
            if (u < 1.0 / 3) {
                gen.steps.emplace_back(FourierStep{});
            } else if (u < 2.0 / 3) {
                gen.steps.emplace_back(ChirpStep(rng.uniform(-3.0, 3.0)));
            } else {
                double l = rng.uniform(0.1, 3.0);
                if (rng.coin()) l = -l;
                gen.steps.emplace_back(DilationStep(l, 0));
            }
        }
        const SymplecticMatrix s = chain_product(gen);
        const GeneratorChain chain = decompose(s);
        CHECK(max_abs_diff(multiply_steps(chain), s.entries()) < 1e-10);
    }
}

TEST_CASE("decompose reconstructs random Sp(2) matrices") {
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        GeneratorChain gen;
        gen.d = 2;
        for (int i = 0; i < 4; ++i) {
            const double u = rng.uniform();
            if (u < 0.4) {
                gen.steps.emplace_back(FourierStep{});
            } else if (u < 0.7) {
                Mat p(2, 2);
                const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2),
                             c = rng.uniform(-2, 2);
                p << a, b, b, c;
                gen.steps.emplace_back(ChirpStep(p));
            } else {
                Mat l(2, 2);
                do {
                    for (int r = 0; r < 2; ++r)
                        for (int cc = 0; cc < 2; ++cc) l(r, cc) = rng.uniform(-2, 2);
                } while (std::abs(l.determinant()) < 0.2);
                gen.steps.emplace_back(DilationStep(l, 0));
            }
        }
        const SymplecticMatrix s = chain_product(gen);
        const GeneratorChain chain = decompose(s);
        CHECK(max_abs_diff(multiply_steps(chain), s.entries()) < 1e-9);
    }
}

TEST_CASE("chain_product basics") {
    GeneratorChain empty;
    empty.d = 1;
    CHECK(max_abs_diff(chain_product(empty).entries(), Mat::Identity(2, 2)) == 0.0);

    GeneratorChain ff;
    ff.d = 1;
    ff.steps.emplace_back(FourierStep{});
    ff.steps.emplace_back(FourierStep{});
    CHECK(max_abs_diff(chain_product(ff).entries(), -Mat::Identity(2, 2)) == 0.0);
}

TEST_CASE("generated matrices satisfy the group invariants") {
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const SymplecticMatrix s = random_sp1(rng);
        CHECK(is_symplectic(s.entries(), 1e-10));
        CHECK(std::abs(s.entries().determinant() - 1.0) < 1e-10);
        // inverse is exact on the group
        CHECK(max_abs_diff(s.entries() * s.inverse().entries(), Mat::Identity(2, 2)) < 1e-12);
    }
}

TEST_CASE("quadratic form generates a free matrix consistent with free_factor") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const QuadraticForm w(rng.uniform(-2, 2), rng.coin() ? rng.uniform(0.5, 2) : -rng.uniform(0.5, 2),
                              rng.uniform(-2, 2));
        const SymplecticMatrix s = free_matrix(w);
        // B block of the generated matrix is L^{-1}
        CHECK(s.block_b()(0, 0) == doctest::Approx(1.0 / w.L(0, 0)));
        // and free_factor recovers P, L, Q
        const GeneratorChain chain = free_factor(s);
        CHECK(std::get<ChirpStep>(chain.steps[0]).P(0, 0) == doctest::Approx(w.P(0, 0)));
        CHECK(std::get<DilationStep>(chain.steps[1]).L(0, 0) == doctest::Approx(w.L(0, 0)));
        CHECK(std::get<ChirpStep>(chain.steps[3]).P(0, 0) == doctest::Approx(w.Q(0, 0)));
    }
}

TEST_CASE("constructor rejects near-singular dilations and asymmetric chirps") {
    CHECK_THROWS(DilationStep(1e-13, 0));
    Mat asym(2, 2);
    asym << 0, 0.5, 0, 0;
    CHECK_THROWS(ChirpStep(asym));
}
