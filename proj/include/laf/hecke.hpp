#ifndef LAF_HECKE_HPP
#define LAF_HECKE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "laf/algebra.hpp"
#include "laf/fiber.hpp"
#include "laf/towers.hpp"

namespace laf {

/// A rank-1 root-datum preset defining an Iwahori-Hecke algebra in the
/// Bernstein presentation: H = span_Z { rho_i T_w }, Z = R^W[q^pm],
/// with T^2 = (q-1)T + q and the Bernstein-Lusztig commutation rule.
struct Rank1Datum {
    std::string preset;  // gl2 | sl2 | pgl2
    RingPtr ring;        // laurent[torus vars..., q], q last
    std::size_t n_torus = 0;
    std::vector<std::vector<std::int64_t>> weyl;   // involution on torus exponents
    std::vector<std::int64_t> coroot;              // pi^{a_vee}
    std::vector<std::int64_t> lattice_moduli;      // exponent of var i must be = 0 mod m_i
    std::vector<std::int64_t> rho2;                // second center-module basis monomial
    std::vector<std::pair<Poly, int>> fundamental_weights;
};

Rank1Datum make_rank1_datum(const std::string& preset);

/// Basis size over the center: d * |W| = 4 for every preset.
constexpr std::size_t kHeckeRank = 4;

/// Element in the theta-basis: (lattice exponent, w in {0 = e, 1 = s})
/// mapped to a coefficient Poly in q. Canonical: no zero coefficients.
struct HeckeElement {
    std::map<std::pair<Exponents, int>, Poly> terms;
};

HeckeElement hecke_zero(const Rank1Datum& rd);
HeckeElement hecke_one(const Rank1Datum& rd);
HeckeElement hecke_theta(const Rank1Datum& rd, const std::vector<std::int64_t>& lambda);
HeckeElement hecke_T(const Rank1Datum& rd);

HeckeElement hecke_add(const Rank1Datum& rd, const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_scale(const Poly& c, const HeckeElement& a);
bool hecke_equal(const HeckeElement& a, const HeckeElement& b);

/// T theta_lambda = theta_{s lambda} T + (q-1) * Geo(lambda), with the
/// quotient (theta_lambda - theta_{s lambda}) / (1 - theta_{-a_vee})
/// expanded as the finite geometric sum it provably is.
HeckeElement hecke_mul(const Rank1Datum& rd, const HeckeElement& a, const HeckeElement& b);

/// <lambda, a>: the integer k with lambda - s(lambda) = k * a_vee.
std::int64_t coroot_pairing(const Rank1Datum& rd, const Exponents& lambda);

/// Writes an R-element as z1 * 1 + z2 * pi^{rho2} with W-invariant z_i;
/// verified by re-expansion and invariance. Fatal on failure.
std::pair<Poly, Poly> reduce_to_center(const Rank1Datum& rd, const Poly& r);

/// Coordinates of h in the basis {1, pi^{rho2}, T, pi^{rho2} T} over the
/// center; every coordinate is checked to be W-invariant.
std::vector<Poly> expand_in_basis(const Rank1Datum& rd, const HeckeElement& h);

/// 4x4 matrix of h acting on the basis, entries W-invariant Polys.
BaseMatrix left_mult_over_center(const Rank1Datum& rd, const HeckeElement& h);

/// H as a rank-4 FiniteAlgebra over laurent[torus vars, q] with W-invariant
/// structure constants (validated).
AlgebraPtr hecke_algebra(const Rank1Datum& rd);

/// normalize_up_to_unit(det Gram) of the rank-4 presentation.
Poly hecke_discriminant(const Rank1Datum& rd);

/// The closed form this preset is compared against.
Poly hecke_closed_form(const Rank1Datum& rd);

struct ClosedFormComparison {
    bool equal = false;
    Poly computed;  // normalized Gram-route discriminant
    Poly expected;  // normalized closed form
};
ClosedFormComparison compare_closed_form(const Rank1Datum& rd);

/// R as a rank-d FiniteAlgebra over R^W on the basis {1, pi^{rho2}}.
AlgebraPtr restricted_algebra_R_over_RW(const Rank1Datum& rd);

/// Handoff to the closed-form evaluators.
Rank1RootDatum to_root_datum(const Rank1Datum& rd);

enum class PSVerdict { irreducible, reducible, singular_indeterminate };

struct IrreducibilityResult {
    PSVerdict verdict = PSVerdict::singular_indeterminate;
    Scalar discriminant_value;
    bool have_fiber = false;
    FiberReport fiber;
    std::string detail;
};

/// Evaluates the symbolic discriminant at chi and runs the fiber pipeline;
/// irreducible iff both routes agree on nonvanishing / single block.
IrreducibilityResult principal_series_irreducible(const Rank1Datum& rd,
                                                  const Character& chi,
                                                  std::uint64_t seed = 1);

const char* to_string(PSVerdict v);

} // namespace laf

#endif
