#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "laf/numeric.hpp"

using namespace laf;
using C = std::complex<double>;

TEST_CASE("echelon_exact kernels") {
    // [[2,0],[0,0]] -> kernel spanned by e2
    QMat g{{Rational(2), Rational(0)}, {Rational(0), Rational(0)}};
    auto e = echelon_exact(g);
    CHECK(e.rank == 1);
    REQUIRE(e.kernel.size() == 1);
    CHECK(e.kernel[0][0] == Rational(0));
    CHECK(e.kernel[0][1] == Rational(1));
    CHECK(e.pivot_cols == std::vector<std::size_t>{0});

    // rank-1 matrix of ones in 3x3
    QMat ones(3, QVec(3, Rational(1)));
    auto e3 = echelon_exact(ones);
    CHECK(e3.rank == 1);
    CHECK(e3.kernel.size() == 2);
    // kernel vectors satisfy Ax = 0
    for (const auto& v : e3.kernel) {
        Rational s(0);
        for (const auto& x : v) s += x;
        CHECK(s == Rational(0));
    }
}

TEST_CASE("solve_exact and solve_float") {
    QMat a{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    QVec b{Rational(5), Rational(10)};
    auto x = solve_exact(a, b);
    CHECK(x[0] == Rational(1));
    CHECK(x[1] == Rational(3));
    QMat sing{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_THROWS_AS(solve_exact(sing, b), compute_error);

    CMat ac{{C(2, 0), C(1, 0)}, {C(1, 0), C(3, 0)}};
    CVec bc{C(5, 0), C(10, 0)};
    auto xc = solve_float(ac, bc);
    CHECK(std::abs(xc[0] - C(1, 0)) < 1e-12);
    CHECK(std::abs(xc[1] - C(3, 0)) < 1e-12);
}

namespace {

bool matches_multiset(CVec got, CVec want, double tol) {
    if (got.size() != want.size()) return false;
    std::vector<bool> used(want.size(), false);
    for (const auto& g : got) {
        bool hit = false;
        for (std::size_t i = 0; i < want.size(); ++i) {
            if (!used[i] && std::abs(g - want[i]) < tol) {
                used[i] = true;
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

} // namespace

TEST_CASE("eigenvalues: stock matrices") {
    // companion matrix of (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    CMat comp{{C(0), C(0), C(6)}, {C(1), C(0), C(-11)}, {C(0), C(1), C(6)}};
    CHECK(matches_multiset(eigenvalues(comp), {C(1), C(2), C(3)}, 1e-9));

    CMat rot{{C(0), C(-1)}, {C(1), C(0)}};
    CHECK(matches_multiset(eigenvalues(rot), {C(0, 1), C(0, -1)}, 1e-12));

    CMat zero(4, CVec(4, C(0)));
    CHECK(matches_multiset(eigenvalues(zero), CVec(4, C(0)), 1e-12));

    CMat one{{C(7, -2)}};
    CHECK(matches_multiset(eigenvalues(one), {C(7, -2)}, 1e-15));
}

TEST_CASE("eigenvalues: random diagonalizable with repeats") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int rep = 0; rep < 25; ++rep) {
        // D = diag(a, a, b, c) conjugated by a random shear product
        CVec diag{C(1.5, 0), C(1.5, 0), C(d(rng), d(rng)), C(-2.25, 0.5)};
        std::size_t n = diag.size();
        CMat m(n, CVec(n, C(0)));
        for (std::size_t i = 0; i < n; ++i) m[i][i] = diag[i];
        // apply random similarity S m S^{-1} with S = I + alpha E_{ij}
        for (int k = 0; k < 6; ++k) {
            std::uniform_int_distribution<std::size_t> pick(0, n - 1);
            std::size_t i = pick(rng), j = pick(rng);
            if (i == j) continue;
            double alpha = d(rng);
            for (std::size_t c = 0; c < n; ++c) m[i][c] += alpha * m[j][c];
            for (std::size_t r = 0; r < n; ++r) m[r][j] -= alpha * m[r][i];
        }
        CHECK(matches_multiset(eigenvalues(m), diag, 1e-7));
    }
}

TEST_CASE("cluster_by_radius") {
    CVec vals{C(1.0), C(1.0 + 1e-9), C(2.0), C(2.0 - 1e-9), C(5.0)};
    auto groups = cluster_by_radius(vals, 1e-6);
    REQUIRE(groups.size() == 3);
    CHECK(groups[0].size() == 2);  // around 1
    CHECK(groups[1].size() == 2);  // around 2
    CHECK(groups[2].size() == 1);  // 5

    // chained points merge transitively
    CVec chain{C(0.0), C(0.9e-6), C(1.8e-6)};
    CHECK(cluster_by_radius(chain, 1e-6).size() == 1);
}

TEST_CASE("echelon_float threshold") {
    CMat g{{C(2, 0), C(0, 0)}, {C(0, 0), C(1e-12, 0)}};
    auto e = echelon_float(g, 1e-9);
    CHECK(e.rank == 1);
    REQUIRE(e.kernel.size() == 1);
    CHECK(std::abs(e.kernel[0][1] - C(1, 0)) < 1e-12);
    auto e2 = echelon_float(g, 0.0);
    CHECK(e2.rank == 2);
}
