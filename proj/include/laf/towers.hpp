#ifndef LAF_TOWERS_HPP
#define LAF_TOWERS_HPP

#include <utility>
#include <vector>

#include "laf/algebra.hpp"

namespace laf {

/// Element of B written in B's basis (Polys over A).
using BElem = std::vector<Poly>;

/// A tower C / B / A of commutative finite free extensions. C is presented
/// over B by structure constants whose entries are B-elements; the induced
/// algebra C_over_A on the product basis {b_i c_j} (index j*rank(B)+i) is
/// built at construction and validated.
struct Tower {
    AlgebraPtr B;                                     // commutative over A
    std::size_t rank_c = 0;                           // [C : B]
    std::vector<BElem> c_unit;                        // rank_c B-coordinates
    std::vector<std::vector<std::vector<BElem>>> c_mul;  // [i][j] -> rank_c B-coords
    AlgebraPtr C_over_A;
};

/// Element of C in B-coordinates.
struct CElem {
    std::vector<BElem> coords;
};

Tower make_tower(AlgebraPtr B, std::size_t rank_c, std::vector<BElem> c_unit,
                 std::vector<std::vector<std::vector<BElem>>> c_mul);

BElem b_add(const FiniteAlgebra& B, const BElem& x, const BElem& y);
BElem b_mul(const FiniteAlgebra& B, const BElem& x, const BElem& y);

/// Flattens B-coordinates of a C-element onto the product basis.
std::vector<Poly> flatten(const Tower& t, const CElem& u);

/// Trace and norm of u acting on C as a B-module (entries stay in B).
BElem trace_C_over_B(const Tower& t, const CElem& u);
BElem norm_C_over_B(const Tower& t, const CElem& u);

/// det over B of the B-valued Gram matrix tr_{C/B}(c_i c_j).
BElem discriminant_C_over_B(const Tower& t);

/// N_{B/A}: determinant of left multiplication on B.
Poly norm_B_over_A(const FiniteAlgebra& B, const BElem& b);

/// N_{C/A}(u) = N_{B/A}(N_{C/B}(u)), exact equality of Polys.
bool check_norm_transitivity(const Tower& t, const CElem& u);

/// N_{C/A}(b * 1_C) = N_{B/A}(b)^{[C:B]}.
bool check_norm_scalar_extension(const Tower& t, const BElem& b);

/// d_{C/A} = (d_{B/A})^{[C:B]} * N_{B/A}(d_{C/B}), up to unit.
bool check_discriminant_tower(const Tower& t);

/// det{tr(p r_i r_j)} = N(p) * det{tr(r_i r_j)} with (r_i) the full basis of
/// a commutative algebra; exact equality, no unit slack.
bool check_nctrans(const AlgebraPtr& alg, const AlgebraElement& p);

// ---------------------------------------------------------------------------
// Rank-1 root datum closed forms

/// Data for the rank-1 closed-form discriminant evaluators. The ring is
/// laurent[torus vars..., q] with q last; exponent vectors index the torus
/// variables only. weyl is the involution on torus exponents.
struct Rank1RootDatum {
    RingPtr ring;
    std::size_t n_torus = 0;
    std::vector<std::vector<std::int64_t>> weyl;
    std::vector<std::int64_t> coroot;      // pi^{a_vee}
    std::vector<std::int64_t> module_gen;  // rho_2: R = R^W + R^W * pi^{rho_2}
    int n_w = 2;                           // Weyl group order
    std::vector<std::pair<Poly, int>> fundamental_weights;  // (omega_i, d_i)
};

void validate_root_datum(const Rank1RootDatum& rd);

/// Applies the Weyl involution to every exponent vector (q fixed).
Poly weyl_apply(const Rank1RootDatum& rd, const Poly& p);

/// Monomial pi^lambda (torus exponents lambda, q exponent extra).
Poly torus_monomial(const Rank1RootDatum& rd, const std::vector<std::int64_t>& lambda,
                    std::int64_t q_exp = 0);

/// e_{±a} = 1 - q^{-1} pi^{±a_vee};  d_{±a} = 1 - pi^{±a_vee}.
Poly e_factor(const Rank1RootDatum& rd, int sign);
Poly d_factor(const Rank1RootDatum& rd, int sign);

/// Gindikin-Karpelevich pair for the reflection: (e_a e_{-a}, d_a d_{-a}),
/// returned unreduced.
std::pair<Poly, Poly> gk_product(const Rank1RootDatum& rd);

/// Discriminant of R over R^W: prod_± (1 - pi^{±delta}) with
/// delta = rho_2 - s(rho_2). When delta equals the coroot (gl2, pgl2) this
/// is the product of the d-factors over both roots.
Poly steinberg_discriminant(const Rank1RootDatum& rd);

/// Adjoint closed form (e_a e_{-a})^{n_w^2 / 2}, normalized.
Poly adjoint_discriminant_formula(const Rank1RootDatum& rd);

/// General closed form (e_a e_{-a})^{d n^2/2} * (prod omega_i^{d_i(d_i-1)})^{n/r},
/// normalized. Errors when weights are missing or r does not divide n_w.
Poly gendisc_formula(const Rank1RootDatum& rd, int d_scale, int r_cover);

} // namespace laf

#endif
