#ifndef LAF_TESTUTIL_HPP
#define LAF_TESTUTIL_HPP

#include <random>
#include <vector>

#include "laf/algebra.hpp"
#include "laf/poly.hpp"

namespace laf::testutil {

using Rng = std::mt19937_64;

inline Rational rand_rational(Rng& rng, int num_max = 9, int den_max = 4) {
    std::uniform_int_distribution<int> num(-num_max, num_max);
    std::uniform_int_distribution<int> den(1, den_max);
    return Rational(num(rng), den(rng));
}

inline Rational rand_nonzero_rational(Rng& rng, int num_max = 9, int den_max = 4) {
    for (;;) {
        Rational r = rand_rational(rng, num_max, den_max);
        if (!r.is_zero()) return r;
    }
}

inline Poly rand_poly(Rng& rng, const RingPtr& ring, int max_terms = 4,
                      int exp_lo = -5, int exp_hi = 5) {
    if (ring->kind == RingKind::polynomial && exp_lo < 0) exp_lo = 0;
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(exp_lo, exp_hi);
    Poly p(ring);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Exponents e(ring->arity());
        for (auto& x : e) x = exp(rng);
        p = p + Poly::monomial(ring, std::move(e), rand_rational(rng));
    }
    return p;
}

inline Poly rand_nonzero_poly(Rng& rng, const RingPtr& ring, int max_terms = 4,
                              int exp_lo = -5, int exp_hi = 5) {
    for (;;) {
        Poly p = rand_poly(rng, ring, max_terms, exp_lo, exp_hi);
        if (!p.is_zero()) return p;
    }
}

/// A random unit of the ring: nonzero constant, times a monomial in laurent kind.
inline Poly rand_unit(Rng& rng, const RingPtr& ring) {
    Rational c = rand_nonzero_rational(rng);
    if (ring->kind == RingKind::polynomial) return Poly::constant(ring, c);
    std::uniform_int_distribution<int> exp(-4, 4);
    Exponents e(ring->arity());
    for (auto& x : e) x = exp(rng);
    return Poly::monomial(ring, std::move(e), c);
}

/// k[y]/(y^n - f) over the given base, basis {1, y, ..., y^{n-1}}.
inline AlgebraPtr monogenic_algebra(const RingPtr& base, std::size_t n, const Poly& f) {
    FiniteAlgebra a;
    a.base = base;
    a.rank = n;
    a.commutative = true;
    for (std::size_t i = 0; i < n; ++i) a.basis_names.push_back("y" + std::to_string(i));
    a.unit.assign(n, Poly(base));
    a.unit[0] = Poly::constant(base, Rational(1));
    a.mul_table.assign(n, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, Poly(base))));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t k = i + j;
            if (k < n)
                a.mul_table[i][j][k] = Poly::constant(base, Rational(1));
            else
                a.mul_table[i][j][k - n] = f;  // y^n = f, and k - n < n - 1
        }
    }
    return make_algebra(std::move(a));
}

/// Direct product A x B on the concatenated basis.
inline AlgebraPtr product_algebra(const AlgebraPtr& A, const AlgebraPtr& B) {
    FiniteAlgebra p;
    p.base = A->base;
    p.rank = A->rank + B->rank;
    p.commutative = A->commutative && B->commutative;
    for (auto& s : A->basis_names) p.basis_names.push_back("l_" + s);
    for (auto& s : B->basis_names) p.basis_names.push_back("r_" + s);
    p.unit.assign(p.rank, Poly(p.base));
    for (std::size_t i = 0; i < A->rank; ++i) p.unit[i] = A->unit[i];
    for (std::size_t i = 0; i < B->rank; ++i) p.unit[A->rank + i] = B->unit[i];
    p.mul_table.assign(p.rank,
        std::vector<std::vector<Poly>>(p.rank, std::vector<Poly>(p.rank, Poly(p.base))));
    for (std::size_t i = 0; i < A->rank; ++i)
        for (std::size_t j = 0; j < A->rank; ++j)
            for (std::size_t k = 0; k < A->rank; ++k)
                p.mul_table[i][j][k] = A->mul_table[i][j][k];
    for (std::size_t i = 0; i < B->rank; ++i)
        for (std::size_t j = 0; j < B->rank; ++j)
            for (std::size_t k = 0; k < B->rank; ++k)
                p.mul_table[A->rank + i][A->rank + j][A->rank + k] = B->mul_table[i][j][k];
    return make_algebra(std::move(p));
}

/// 2x2 matrix algebra on basis {e11, e12, e21, e22}.
inline AlgebraPtr matrix2_algebra(const RingPtr& base) {
    FiniteAlgebra m;
    m.base = base;
    m.rank = 4;
    m.commutative = false;
    m.basis_names = {"e11", "e12", "e21", "e22"};
    auto one = Poly::constant(base, Rational(1));
    m.unit.assign(4, Poly(base));
    m.unit[0] = one;
    m.unit[3] = one;
    m.mul_table.assign(4, std::vector<std::vector<Poly>>(4, std::vector<Poly>(4, Poly(base))));
    // e_{ab} e_{cd} = delta_{bc} e_{ad}; index = 2*(a-1) + (d-1)
    auto idx = [](int a, int b) { return 2 * a + b; };
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    if (b == c) m.mul_table[idx(a, b)][idx(c, d)][idx(a, d)] = one;
    return make_algebra(std::move(m));
}

inline AlgebraElement rand_element(Rng& rng, const AlgebraPtr& alg, int max_terms = 2,
                                   int exp_lo = -2, int exp_hi = 2) {
    std::vector<Poly> c;
    for (std::size_t i = 0; i < alg->rank; ++i)
        c.push_back(rand_poly(rng, alg->base, max_terms, exp_lo, exp_hi));
    return element(alg, std::move(c));
}

/// A random commutative algebra of rank <= 4 over the base: monogenic or a
/// product of two monogenic factors.
inline AlgebraPtr rand_commutative_algebra(Rng& rng, const RingPtr& base) {
    std::uniform_int_distribution<int> pick(0, 2);
    int exp_lo = base->kind == RingKind::polynomial ? 0 : -2;
    switch (pick(rng)) {
        case 0: {
            std::uniform_int_distribution<int> deg(2, 4);
            return monogenic_algebra(base, deg(rng), rand_poly(rng, base, 2, exp_lo, 2));
        }
        case 1: {
            auto A = monogenic_algebra(base, 2, rand_poly(rng, base, 2, exp_lo, 2));
            auto B = monogenic_algebra(base, 2, rand_poly(rng, base, 2, exp_lo, 2));
            return product_algebra(A, B);
        }
        default: {
            auto A = monogenic_algebra(base, 1, Poly::constant(base, Rational(1)));
            auto B = monogenic_algebra(base, 3, rand_poly(rng, base, 2, exp_lo, 2));
            return product_algebra(A, B);
        }
    }
}

} // namespace laf::testutil

#endif
