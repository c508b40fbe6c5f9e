#include "laf/towers.hpp"

namespace laf {

BElem b_add(const FiniteAlgebra& B, const BElem& x, const BElem& y) {
    BElem out(B.rank, Poly(B.base));
    for (std::size_t i = 0; i < B.rank; ++i) out[i] = x[i] + y[i];
    return out;
}

BElem b_mul(const FiniteAlgebra& B, const BElem& x, const BElem& y) {
    BElem out(B.rank, Poly(B.base));
    for (std::size_t i = 0; i < B.rank; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < B.rank; ++j) {
            if (y[j].is_zero()) continue;
            Poly xy = x[i] * y[j];
            for (std::size_t k = 0; k < B.rank; ++k)
                if (!B.mul_table[i][j][k].is_zero())
                    out[k] = out[k] + xy * B.mul_table[i][j][k];
        }
    }
    return out;
}

namespace {

BElem b_zero(const FiniteAlgebra& B) { return BElem(B.rank, Poly(B.base)); }

bool b_is_zero(const BElem& x) {
    for (const auto& c : x)
        if (!c.is_zero()) return false;
    return true;
}

/// Determinant of a square matrix with entries in B by cofactor expansion.
BElem det_over_B(const FiniteAlgebra& B, const std::vector<std::vector<BElem>>& m) {
    std::size_t n = m.size();
    if (n > 6) throw compute_error("det over B limited to rank <= 6");
    if (n == 0) {
        BElem one = b_zero(B);
        one = B.unit;
        return one;
    }
    if (n == 1) return m[0][0];
    BElem acc = b_zero(B);
    for (std::size_t j = 0; j < n; ++j) {
        if (b_is_zero(m[0][j])) continue;
        std::vector<std::vector<BElem>> sub;
        sub.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<BElem> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        BElem term = b_mul(B, m[0][j], det_over_B(B, sub));
        if (j % 2 == 1)
            for (auto& c : term) c = -c;
        acc = b_add(B, acc, term);
    }
    return acc;
}

/// Left multiplication matrix of u on the c-basis, entries in B.
std::vector<std::vector<BElem>> left_mult_over_B(const Tower& t, const CElem& u) {
    const auto& B = *t.B;
    std::vector<std::vector<BElem>> m(t.rank_c, std::vector<BElem>(t.rank_c, b_zero(B)));
    for (std::size_t j = 0; j < t.rank_c; ++j)
        for (std::size_t i = 0; i < t.rank_c; ++i) {
            if (b_is_zero(u.coords[i])) continue;
            for (std::size_t k = 0; k < t.rank_c; ++k) {
                const BElem& coeff = t.c_mul[i][j][k];
                if (b_is_zero(coeff)) continue;
                m[k][j] = b_add(B, m[k][j], b_mul(B, u.coords[i], coeff));
            }
        }
    return m;
}

} // namespace

Tower make_tower(AlgebraPtr B, std::size_t rank_c, std::vector<BElem> c_unit,
                 std::vector<std::vector<std::vector<BElem>>> c_mul) {
    if (!B->commutative) throw input_error("tower requires a commutative middle algebra B");
    if (rank_c == 0) throw input_error("tower requires positive [C:B]");
    if (c_unit.size() != rank_c || c_mul.size() != rank_c)
        throw input_error("tower C tables have wrong rank");
    for (const auto& row : c_mul) {
        if (row.size() != rank_c) throw input_error("tower C tables have wrong rank");
        for (const auto& e : row)
            if (e.size() != rank_c) throw input_error("tower C tables have wrong rank");
    }

    Tower t;
    t.B = std::move(B);
    t.rank_c = rank_c;
    t.c_unit = std::move(c_unit);
    t.c_mul = std::move(c_mul);

    const auto& Balg = *t.B;
    std::size_t nb = Balg.rank, n = nb * rank_c;
    FiniteAlgebra CA;
    CA.base = Balg.base;
    CA.rank = n;
    CA.commutative = true;
    for (std::size_t j = 0; j < rank_c; ++j)
        for (std::size_t i = 0; i < nb; ++i)
            CA.basis_names.push_back(Balg.basis_names[i] + "*c" + std::to_string(j));
    auto slot = [&](std::size_t bi, std::size_t cj) { return cj * nb + bi; };

    CA.unit.assign(n, Poly(Balg.base));
    for (std::size_t j = 0; j < rank_c; ++j)
        for (std::size_t i = 0; i < nb; ++i) CA.unit[slot(i, j)] = t.c_unit[j][i];

    CA.mul_table.assign(n, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, Poly(Balg.base))));
    // (b_i c_j)(b_k c_l) = sum_m (b_i b_k beta_m) c_m, beta_m = c_mul[j][l][m]
    for (std::size_t j = 0; j < rank_c; ++j)
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t l = 0; l < rank_c; ++l)
                for (std::size_t k = 0; k < nb; ++k) {
                    BElem bi = b_zero(Balg), bk = b_zero(Balg);
                    bi[i] = Poly::constant(Balg.base, Rational(1));
                    bk[k] = Poly::constant(Balg.base, Rational(1));
                    BElem bik = b_mul(Balg, bi, bk);
                    auto& coords = CA.mul_table[slot(i, j)][slot(k, l)];
                    for (std::size_t m = 0; m < rank_c; ++m) {
                        const BElem& beta = t.c_mul[j][l][m];
                        if (b_is_zero(beta)) continue;
                        BElem prod = b_mul(Balg, bik, beta);
                        for (std::size_t w = 0; w < nb; ++w)
                            coords[slot(w, m)] = coords[slot(w, m)] + prod[w];
                    }
                }
    t.C_over_A = make_algebra(std::move(CA));  // validates associativity and unit
    return t;
}

std::vector<Poly> flatten(const Tower& t, const CElem& u) {
    std::size_t nb = t.B->rank;
    std::vector<Poly> out(nb * t.rank_c, Poly(t.B->base));
    for (std::size_t j = 0; j < t.rank_c; ++j)
        for (std::size_t i = 0; i < nb; ++i) out[j * nb + i] = u.coords[j][i];
    return out;
}

BElem trace_C_over_B(const Tower& t, const CElem& u) {
    auto m = left_mult_over_B(t, u);
    BElem tr = b_zero(*t.B);
    for (std::size_t i = 0; i < t.rank_c; ++i) tr = b_add(*t.B, tr, m[i][i]);
    return tr;
}

BElem norm_C_over_B(const Tower& t, const CElem& u) {
    return det_over_B(*t.B, left_mult_over_B(t, u));
}

BElem discriminant_C_over_B(const Tower& t) {
    const auto& B = *t.B;
    std::vector<std::vector<BElem>> g(t.rank_c, std::vector<BElem>(t.rank_c, b_zero(B)));
    // tr(c_m) over B, then bilinearity
    std::vector<BElem> ctr(t.rank_c, b_zero(B));
    for (std::size_t m = 0; m < t.rank_c; ++m)
        for (std::size_t j = 0; j < t.rank_c; ++j)
            ctr[m] = b_add(B, ctr[m], t.c_mul[m][j][j]);
    for (std::size_t i = 0; i < t.rank_c; ++i)
        for (std::size_t j = 0; j < t.rank_c; ++j) {
            BElem acc = b_zero(B);
            for (std::size_t m = 0; m < t.rank_c; ++m) {
                const BElem& c = t.c_mul[i][j][m];
                if (!b_is_zero(c)) acc = b_add(B, acc, b_mul(B, c, ctr[m]));
            }
            g[i][j] = std::move(acc);
        }
    return det_over_B(B, g);
}

Poly norm_B_over_A(const FiniteAlgebra& B, const BElem& b) {
    return det_base_matrix(left_mult_matrix(B, b));
}

bool check_norm_transitivity(const Tower& t, const CElem& u) {
    Poly via_c = norm(AlgebraElement{t.C_over_A, flatten(t, u)});
    Poly via_b = norm_B_over_A(*t.B, norm_C_over_B(t, u));
    return via_c == via_b;
}

bool check_norm_scalar_extension(const Tower& t, const BElem& b) {
    CElem u;
    u.coords.assign(t.rank_c, b_zero(*t.B));
    // b * 1_C
    for (std::size_t j = 0; j < t.rank_c; ++j)
        u.coords[j] = b_mul(*t.B, b, t.c_unit[j]);
    Poly lhs = norm(AlgebraElement{t.C_over_A, flatten(t, u)});
    Poly rhs = poly_pow(norm_B_over_A(*t.B, b), t.rank_c);
    return lhs == rhs;
}

bool check_discriminant_tower(const Tower& t) {
    Poly lhs = det_base_matrix(gram_matrix(*t.C_over_A));
    Poly d_b = det_base_matrix(gram_matrix(*t.B));
    Poly rhs = poly_pow(d_b, t.rank_c) * norm_B_over_A(*t.B, discriminant_C_over_B(t));
    return equal_up_to_unit(lhs, rhs);
}

bool check_nctrans(const AlgebraPtr& alg, const AlgebraElement& p) {
    if (!alg->commutative) throw input_error("nctrans requires a commutative algebra");
    std::size_t n = alg->rank;
    BaseMatrix m(alg->base, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto pei = mul(p, basis_element(alg, i));
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = trace(mul(pei, basis_element(alg, j)));
    }
    Poly lhs = det_base_matrix(m);
    Poly rhs = norm(p) * det_base_matrix(gram_matrix(*alg));
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Rank-1 closed forms

void validate_root_datum(const Rank1RootDatum& rd) {
    if (!rd.ring || rd.ring->kind != RingKind::laurent)
        throw input_error("root datum needs a laurent ring");
    if (rd.ring->arity() != rd.n_torus + 1)
        throw input_error("root datum ring must be laurent[torus vars..., q]");
    if (rd.weyl.size() != rd.n_torus)
        throw input_error("weyl matrix has wrong size");
    for (const auto& row : rd.weyl)
        if (row.size() != rd.n_torus) throw input_error("weyl matrix has wrong size");
    if (rd.coroot.size() != rd.n_torus || rd.module_gen.size() != rd.n_torus)
        throw input_error("exponent vectors have wrong size");

    auto apply = [&](const std::vector<std::int64_t>& v) {
        std::vector<std::int64_t> out(rd.n_torus, 0);
        for (std::size_t i = 0; i < rd.n_torus; ++i)
            for (std::size_t j = 0; j < rd.n_torus; ++j) out[i] += rd.weyl[i][j] * v[j];
        return out;
    };
    // involution
    for (std::size_t j = 0; j < rd.n_torus; ++j) {
        std::vector<std::int64_t> e(rd.n_torus, 0);
        e[j] = 1;
        auto twice = apply(apply(e));
        if (twice != e) throw input_error("weyl action is not an involution");
    }
    bool coroot_zero = true;
    for (auto x : rd.coroot) coroot_zero = coroot_zero && x == 0;
    if (coroot_zero) throw input_error("coroot monomial is zero");
    auto neg = apply(rd.coroot);
    for (std::size_t i = 0; i < rd.n_torus; ++i)
        if (neg[i] != -rd.coroot[i])
            throw input_error("coroot monomial is not anti-invariant");
    for (const auto& [w, d] : rd.fundamental_weights) {
        if (d <= 0) throw input_error("fundamental weight exponent must be positive");
        if (weyl_apply(rd, w) != w)
            throw input_error("fundamental weight is not W-invariant");
    }
}

Poly weyl_apply(const Rank1RootDatum& rd, const Poly& p) {
    require_same_ring(p.ring(), rd.ring, "weyl_apply");
    return p.map_exponents([&](const Exponents& e) {
        Exponents out(e.size(), 0);
        for (std::size_t i = 0; i < rd.n_torus; ++i)
            for (std::size_t j = 0; j < rd.n_torus; ++j) out[i] += rd.weyl[i][j] * e[j];
        out[rd.n_torus] = e[rd.n_torus];  // q untouched
        return out;
    });
}

Poly torus_monomial(const Rank1RootDatum& rd, const std::vector<std::int64_t>& lambda,
                    std::int64_t q_exp) {
    Exponents e(rd.n_torus + 1, 0);
    for (std::size_t i = 0; i < rd.n_torus; ++i) e[i] = lambda[i];
    e[rd.n_torus] = q_exp;
    return Poly::monomial(rd.ring, std::move(e), Rational(1));
}

namespace {

std::vector<std::int64_t> negate(const std::vector<std::int64_t>& v) {
    auto out = v;
    for (auto& x : out) x = -x;
    return out;
}

} // namespace

Poly e_factor(const Rank1RootDatum& rd, int sign) {
    auto a = sign >= 0 ? rd.coroot : negate(rd.coroot);
    return Poly::constant(rd.ring, Rational(1)) - torus_monomial(rd, a, -1);
}

Poly d_factor(const Rank1RootDatum& rd, int sign) {
    auto a = sign >= 0 ? rd.coroot : negate(rd.coroot);
    return Poly::constant(rd.ring, Rational(1)) - torus_monomial(rd, a, 0);
}

std::pair<Poly, Poly> gk_product(const Rank1RootDatum& rd) {
    return {e_factor(rd, +1) * e_factor(rd, -1), d_factor(rd, +1) * d_factor(rd, -1)};
}

Poly steinberg_discriminant(const Rank1RootDatum& rd) {
    std::vector<std::int64_t> s_gen(rd.n_torus, 0);
    for (std::size_t i = 0; i < rd.n_torus; ++i)
        for (std::size_t j = 0; j < rd.n_torus; ++j)
            s_gen[i] += rd.weyl[i][j] * rd.module_gen[j];
    std::vector<std::int64_t> delta(rd.n_torus, 0);
    bool zero = true;
    for (std::size_t i = 0; i < rd.n_torus; ++i) {
        delta[i] = rd.module_gen[i] - s_gen[i];
        zero = zero && delta[i] == 0;
    }
    if (zero) throw input_error("module generator is W-invariant; no rank-1 extension");
    Poly one = Poly::constant(rd.ring, Rational(1));
    return normalize_up_to_unit((one - torus_monomial(rd, delta)) *
                                (one - torus_monomial(rd, negate(delta))));
}

Poly adjoint_discriminant_formula(const Rank1RootDatum& rd) {
    if ((rd.n_w * rd.n_w) % 2 != 0)
        throw input_error("n_w^2/2 is not integral");
    auto [e, d] = gk_product(rd);
    (void)d;
    return normalize_up_to_unit(poly_pow(e, static_cast<std::uint64_t>(rd.n_w * rd.n_w / 2)));
}

Poly gendisc_formula(const Rank1RootDatum& rd, int d_scale, int r_cover) {
    if (rd.fundamental_weights.empty())
        throw input_error("gendisc requires fundamental weights");
    if (d_scale <= 0 || r_cover <= 0)
        throw input_error("gendisc scale parameters must be positive");
    if (rd.n_w % r_cover != 0)
        throw input_error("non-integral exponent n/r in gendisc (r does not divide n_w)");
    if ((d_scale * rd.n_w * rd.n_w) % 2 != 0)
        throw input_error("non-integral exponent d*n^2/2 in gendisc");

    auto [e, d] = gk_product(rd);
    (void)d;
    Poly out = poly_pow(e, static_cast<std::uint64_t>(d_scale * rd.n_w * rd.n_w / 2));
    std::uint64_t outer = static_cast<std::uint64_t>(rd.n_w / r_cover);
    for (const auto& [w, dw] : rd.fundamental_weights) {
        std::uint64_t exp = static_cast<std::uint64_t>(dw) * static_cast<std::uint64_t>(dw - 1);
        if (exp == 0) continue;
        out = out * poly_pow(w, exp * outer);
    }
    return normalize_up_to_unit(out);
}

} // namespace laf
