#include "laf/hecke.hpp"

#include <algorithm>

namespace laf {

namespace {

Exponents weyl_exp(const Rank1Datum& rd, const Exponents& lambda) {
    Exponents out(rd.n_torus, 0);
    for (std::size_t i = 0; i < rd.n_torus; ++i)
        for (std::size_t j = 0; j < rd.n_torus; ++j) out[i] += rd.weyl[i][j] * lambda[j];
    return out;
}

void check_lattice(const Rank1Datum& rd, const Exponents& lambda) {
    if (lambda.size() != rd.n_torus)
        throw input_error("lattice vector has wrong arity for preset " + rd.preset);
    for (std::size_t i = 0; i < rd.n_torus; ++i)
        if (rd.lattice_moduli[i] > 1 && lambda[i] % rd.lattice_moduli[i] != 0)
            throw input_error("exponent vector is outside the " + rd.preset + " lattice");
}

Exponents vadd(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Exponents vsub(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Exponents vscale(std::int64_t k, const Exponents& a) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
    return out;
}

Poly q_minus_1(const Rank1Datum& rd) {
    return Poly::variable(rd.ring, "q") - Poly::constant(rd.ring, Rational(1));
}

/// pi^lambda as a Poly of the preset ring (q exponent zero).
Poly lattice_monomial(const Rank1Datum& rd, const Exponents& lambda) {
    Exponents e(rd.n_torus + 1, 0);
    for (std::size_t i = 0; i < rd.n_torus; ++i) e[i] = lambda[i];
    return Poly::monomial(rd.ring, std::move(e), Rational(1));
}

/// Weyl action on a Poly of the preset ring (q fixed).
Poly weyl_poly(const Rank1Datum& rd, const Poly& p) {
    return p.map_exponents([&](const Exponents& e) {
        Exponents out(e.size(), 0);
        for (std::size_t i = 0; i < rd.n_torus; ++i)
            for (std::size_t j = 0; j < rd.n_torus; ++j) out[i] += rd.weyl[i][j] * e[j];
        out[rd.n_torus] = e[rd.n_torus];
        return out;
    });
}

void hecke_accumulate(HeckeElement& h, const Exponents& lambda, int w, const Poly& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(lambda, w);
    auto it = h.terms.find(key);
    if (it == h.terms.end()) {
        h.terms.emplace(std::move(key), c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) h.terms.erase(it);
    }
}

} // namespace

Rank1Datum make_rank1_datum(const std::string& preset) {
    Rank1Datum rd;
    rd.preset = preset;
    if (preset == "gl2") {
        rd.ring = laurent_ring({"x1", "x2", "q"});
        rd.n_torus = 2;
        rd.weyl = {{0, 1}, {1, 0}};
        rd.coroot = {1, -1};
        rd.lattice_moduli = {1, 1};
        rd.rho2 = {1, 0};
        Poly x1 = Poly::variable(rd.ring, "x1"), x2 = Poly::variable(rd.ring, "x2");
        rd.fundamental_weights = {{x1 + x2, 1}, {x1 * x2, 1}};
    } else if (preset == "pgl2") {
        rd.ring = laurent_ring({"x", "q"});
        rd.n_torus = 1;
        rd.weyl = {{-1}};
        rd.coroot = {2};
        rd.lattice_moduli = {1};
        rd.rho2 = {1};
        Poly x = Poly::variable(rd.ring, "x");
        rd.fundamental_weights = {{x + Poly::variable(rd.ring, "x", -1), 1}};
    } else if (preset == "sl2") {
        rd.ring = laurent_ring({"x", "q"});
        rd.n_torus = 1;
        rd.weyl = {{-1}};
        rd.coroot = {2};
        rd.lattice_moduli = {2};
        rd.rho2 = {2};
        Poly x = Poly::variable(rd.ring, "x");
        rd.fundamental_weights = {{x + Poly::variable(rd.ring, "x", -1), 2}};
    } else {
        throw input_error("unknown preset '" + preset + "' (expected gl2, sl2 or pgl2)");
    }
    return rd;
}

HeckeElement hecke_zero(const Rank1Datum&) { return {}; }

HeckeElement hecke_one(const Rank1Datum& rd) {
    HeckeElement h;
    h.terms.emplace(std::make_pair(Exponents(rd.n_torus, 0), 0),
                    Poly::constant(rd.ring, Rational(1)));
    return h;
}

HeckeElement hecke_theta(const Rank1Datum& rd, const std::vector<std::int64_t>& lambda) {
    check_lattice(rd, lambda);
    HeckeElement h;
    h.terms.emplace(std::make_pair(lambda, 0), Poly::constant(rd.ring, Rational(1)));
    return h;
}

HeckeElement hecke_T(const Rank1Datum& rd) {
    HeckeElement h;
    h.terms.emplace(std::make_pair(Exponents(rd.n_torus, 0), 1),
                    Poly::constant(rd.ring, Rational(1)));
    return h;
}

HeckeElement hecke_add(const Rank1Datum&, const HeckeElement& a, const HeckeElement& b) {
    HeckeElement out = a;
    for (const auto& [key, c] : b.terms) hecke_accumulate(out, key.first, key.second, c);
    return out;
}

HeckeElement hecke_scale(const Poly& c, const HeckeElement& a) {
    HeckeElement out;
    if (c.is_zero()) return out;
    for (const auto& [key, v] : a.terms) out.terms.emplace(key, c * v);
    return out;
}

bool hecke_equal(const HeckeElement& a, const HeckeElement& b) { return a.terms == b.terms; }

std::int64_t coroot_pairing(const Rank1Datum& rd, const Exponents& lambda) {
    Exponents delta = vsub(lambda, weyl_exp(rd, lambda));
    std::size_t piv = rd.n_torus;
    for (std::size_t i = 0; i < rd.n_torus; ++i)
        if (rd.coroot[i] != 0) { piv = i; break; }
    if (piv == rd.n_torus) throw input_error("zero coroot in preset");
    if (delta[piv] % rd.coroot[piv] != 0)
        throw input_error("lattice vector is not paired integrally with the coroot");
    std::int64_t k = delta[piv] / rd.coroot[piv];
    if (delta != vscale(k, rd.coroot))
        throw input_error("lambda - s(lambda) is not a multiple of the coroot");
    return k;
}

HeckeElement hecke_mul(const Rank1Datum& rd, const HeckeElement& a, const HeckeElement& b) {
    for (const auto& [key, c] : a.terms) check_lattice(rd, key.first);
    for (const auto& [key, c] : b.terms) check_lattice(rd, key.first);

    Poly qm1 = q_minus_1(rd);
    Poly q = Poly::variable(rd.ring, "q");
    HeckeElement out;
    for (const auto& [ka, ca] : a.terms) {
        const auto& [la, wa] = ka;
        for (const auto& [kb, cb] : b.terms) {
            const auto& [lb, wb] = kb;
            Poly c = ca * cb;
            if (wa == 0) {
                hecke_accumulate(out, vadd(la, lb), wb, c);
                continue;
            }
            // theta_la T theta_lb T^{wb}
            Exponents slb = weyl_exp(rd, lb);
            Exponents main = vadd(la, slb);
            if (wb == 0) {
                hecke_accumulate(out, main, 1, c);
            } else {  // T T = (q-1) T + q
                hecke_accumulate(out, main, 1, c * qm1);
                hecke_accumulate(out, main, 0, c * q);
            }
            // correction (q-1) theta_la Geo(lb) T^{wb}
            std::int64_t k = coroot_pairing(rd, lb);
            Poly cc = c * qm1;
            if (k > 0) {
                for (std::int64_t j = 0; j < k; ++j)
                    hecke_accumulate(out, vadd(la, vsub(lb, vscale(j, rd.coroot))), wb, cc);
            } else if (k < 0) {
                for (std::int64_t j = 1; j <= -k; ++j)
                    hecke_accumulate(out, vadd(la, vadd(lb, vscale(j, rd.coroot))), wb, -cc);
            }
        }
    }
    return out;
}

std::pair<Poly, Poly> reduce_to_center(const Rank1Datum& rd, const Poly& r) {
    require_same_ring(r.ring(), rd.ring, "reduce_to_center");
    Poly rho = lattice_monomial(rd, rd.rho2);
    Poly srho = weyl_poly(rd, rho);
    Poly sr = weyl_poly(rd, r);
    Poly z2(rd.ring);
    try {
        z2 = divide_exact(r - sr, rho - srho);
    } catch (const compute_error&) {
        throw compute_error("reduce_to_center failed: element is not in the span of "
                            "the center-module basis (wrong basis?)");
    }
    Poly z1 = r - z2 * rho;
    if (weyl_poly(rd, z1) != z1 || weyl_poly(rd, z2) != z2)
        throw compute_error("reduce_to_center produced a non-invariant coordinate (bug)");
    if (z1 + z2 * rho != r)
        throw compute_error("reduce_to_center re-expansion check failed (bug)");
    return {std::move(z1), std::move(z2)};
}

std::vector<Poly> expand_in_basis(const Rank1Datum& rd, const HeckeElement& h) {
    // collect the R-coefficient of T_e and of T_s
    Poly fe(rd.ring), fs(rd.ring);
    for (const auto& [key, c] : h.terms) {
        Poly m = c * lattice_monomial(rd, key.first);
        if (key.second == 0)
            fe = fe + m;
        else
            fs = fs + m;
    }
    auto [z1e, z2e] = reduce_to_center(rd, fe);
    auto [z1s, z2s] = reduce_to_center(rd, fs);
    return {z1e, z2e, z1s, z2s};
}

BaseMatrix left_mult_over_center(const Rank1Datum& rd, const HeckeElement& h) {
    std::vector<HeckeElement> basis = {
        hecke_one(rd), hecke_theta(rd, rd.rho2), hecke_T(rd),
        hecke_mul(rd, hecke_theta(rd, rd.rho2), hecke_T(rd))};
    BaseMatrix m(rd.ring, kHeckeRank, kHeckeRank);
    for (std::size_t j = 0; j < kHeckeRank; ++j) {
        auto col = expand_in_basis(rd, hecke_mul(rd, h, basis[j]));
        for (std::size_t i = 0; i < kHeckeRank; ++i) m.at(i, j) = std::move(col[i]);
    }
    return m;
}

AlgebraPtr hecke_algebra(const Rank1Datum& rd) {
    std::vector<HeckeElement> basis = {
        hecke_one(rd), hecke_theta(rd, rd.rho2), hecke_T(rd),
        hecke_mul(rd, hecke_theta(rd, rd.rho2), hecke_T(rd))};
    FiniteAlgebra h;
    h.base = rd.ring;
    h.rank = kHeckeRank;
    h.commutative = false;
    h.basis_names = {"1", "th", "T", "thT"};
    h.unit = expand_in_basis(rd, hecke_one(rd));
    h.mul_table.assign(kHeckeRank, std::vector<std::vector<Poly>>(kHeckeRank));
    for (std::size_t i = 0; i < kHeckeRank; ++i)
        for (std::size_t j = 0; j < kHeckeRank; ++j)
            h.mul_table[i][j] = expand_in_basis(rd, hecke_mul(rd, basis[i], basis[j]));
    return make_algebra(std::move(h));
}

Poly hecke_discriminant(const Rank1Datum& rd) {
    return discriminant(*hecke_algebra(rd));
}

Poly hecke_closed_form(const Rank1Datum& rd) {
    auto rdm = to_root_datum(rd);
    if (rd.preset == "gl2") {
        // (x2 - q x1)^2 (x1 - q x2)^2
        Poly x1 = Poly::variable(rd.ring, "x1"), x2 = Poly::variable(rd.ring, "x2");
        Poly q = Poly::variable(rd.ring, "q");
        return normalize_up_to_unit(poly_pow(x2 - q * x1, 2) * poly_pow(x1 - q * x2, 2));
    }
    if (rd.preset == "pgl2") return adjoint_discriminant_formula(rdm);
    // sl2: (1 - q^-1 x^2)^2 (1 - q^-1 x^-2)^2 (1 - x^2)^4 (1 + x^2)^4
    Poly one = Poly::constant(rd.ring, Rational(1));
    Poly x2 = Poly::variable(rd.ring, "x", 2);
    return normalize_up_to_unit(poly_pow(e_factor(rdm, +1), 2) *
                                poly_pow(e_factor(rdm, -1), 2) *
                                poly_pow(one - x2, 4) * poly_pow(one + x2, 4));
}

ClosedFormComparison compare_closed_form(const Rank1Datum& rd) {
    ClosedFormComparison out{false, hecke_discriminant(rd),
                             normalize_up_to_unit(hecke_closed_form(rd))};
    out.equal = out.computed == out.expected;
    return out;
}

AlgebraPtr restricted_algebra_R_over_RW(const Rank1Datum& rd) {
    // R = R^W * 1 + R^W * pi^{rho2}; the product rho2^2 reduces back
    auto [z1, z2] = reduce_to_center(rd, lattice_monomial(rd, vscale(2, rd.rho2)));
    FiniteAlgebra r;
    r.base = rd.ring;
    r.rank = 2;
    r.commutative = true;
    r.basis_names = {"1", "rho"};
    r.unit = {Poly::constant(rd.ring, Rational(1)), Poly(rd.ring)};
    auto one = Poly::constant(rd.ring, Rational(1));
    r.mul_table.assign(2, std::vector<std::vector<Poly>>(2, std::vector<Poly>(2, Poly(rd.ring))));
    r.mul_table[0][0][0] = one;
    r.mul_table[0][1][1] = one;
    r.mul_table[1][0][1] = one;
    r.mul_table[1][1] = {z1, z2};
    return make_algebra(std::move(r));
}

Rank1RootDatum to_root_datum(const Rank1Datum& rd) {
    Rank1RootDatum out;
    out.ring = rd.ring;
    out.n_torus = rd.n_torus;
    out.weyl = rd.weyl;
    out.coroot = rd.coroot;
    out.module_gen = rd.rho2;
    out.n_w = 2;
    out.fundamental_weights = rd.fundamental_weights;
    validate_root_datum(out);
    return out;
}

const char* to_string(PSVerdict v) {
    switch (v) {
        case PSVerdict::irreducible: return "irreducible";
        case PSVerdict::reducible: return "reducible";
        default: return "singular-indeterminate";
    }
}

IrreducibilityResult principal_series_irreducible(const Rank1Datum& rd,
                                                  const Character& chi,
                                                  std::uint64_t seed) {
    validate_character(chi, *rd.ring);
    auto alg = hecke_algebra(rd);
    Poly disc = discriminant(*alg);

    IrreducibilityResult res;
    res.discriminant_value = eval_poly(disc, chi.values);
    bool nonzero = chi.mode == Mode::exact ? !res.discriminant_value.is_zero()
                                           : res.discriminant_value.abs() > chi.tolerance;
    try {
        res.fiber = fiber(*alg, chi, seed, &disc);
        res.have_fiber = true;
    } catch (const compute_error& e) {
        res.verdict = PSVerdict::singular_indeterminate;
        res.detail = e.what();
        return res;
    }
    bool single_block = res.fiber.num_simples == 1 && res.fiber.radical_dim == 0;
    if (nonzero && single_block) {
        res.verdict = PSVerdict::irreducible;
    } else if (!nonzero && res.fiber.num_simples >= 2) {
        res.verdict = PSVerdict::reducible;
    } else {
        res.verdict = PSVerdict::singular_indeterminate;
        res.detail = "discriminant and fiber structure disagree: disc " +
                     res.discriminant_value.str() + ", radical " +
                     std::to_string(res.fiber.radical_dim) + ", blocks " +
                     std::to_string(res.fiber.num_simples);
    }
    return res;
}

} // namespace laf
