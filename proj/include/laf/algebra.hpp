#ifndef LAF_ALGEBRA_HPP
#define LAF_ALGEBRA_HPP

#include <memory>
#include <string>
#include <vector>

#include "laf/matrix.hpp"
#include "laf/poly.hpp"

namespace laf {

/// A rank-n algebra over a base ring, presented by structure constants.
/// mul_table[i][j] holds the coordinates of e_i * e_j in the basis.
/// Construct through make_algebra, which validates associativity, the unit
/// law, and (when declared) commutativity on all basis pairs/triples.
struct FiniteAlgebra {
    RingPtr base;
    std::size_t rank = 0;
    std::vector<std::string> basis_names;
    std::vector<Poly> unit;                            // n coordinates
    std::vector<std::vector<std::vector<Poly>>> mul_table;  // [i][j] -> n coords
    bool commutative = false;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

struct AlgebraElement {
    AlgebraPtr alg;
    std::vector<Poly> coords;
};

/// Checks every type invariant; the error message lists all violations.
void validate(const FiniteAlgebra& alg);

AlgebraPtr make_algebra(FiniteAlgebra alg);

AlgebraElement element(const AlgebraPtr& alg, std::vector<Poly> coords);
AlgebraElement basis_element(const AlgebraPtr& alg, std::size_t i);
AlgebraElement unit_element(const AlgebraPtr& alg);
AlgebraElement scale(const Poly& c, const AlgebraElement& u);

AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v);
bool element_is_zero(const AlgebraElement& u);

/// Matrix of left multiplication by u; column j = coordinates of u * e_j.
BaseMatrix left_mult_matrix(const FiniteAlgebra& alg, const std::vector<Poly>& coords);
inline BaseMatrix left_mult_matrix(const AlgebraElement& u) {
    return left_mult_matrix(*u.alg, u.coords);
}

/// Trace / determinant of the left regular representation over the base.
Poly trace(const AlgebraElement& u);
Poly norm(const AlgebraElement& u);

/// Gram matrix of the trace form: G[i][j] = tr(e_i e_j). Symmetric.
BaseMatrix gram_matrix(const FiniteAlgebra& alg);

/// normalize_up_to_unit(det(gram_matrix)); generates the discriminant ideal.
Poly discriminant(const FiniteAlgebra& alg);

constexpr std::size_t kDefaultMinorBudget = 20000;

/// Generators of the i-th determinantal ideal of the trace form: all
/// (n-i+1)-minors of the Gram matrix, normalized up to unit, deduplicated.
/// A unit generator collapses the list to {1}; the zero ideal is {0}.
std::vector<Poly> determinantal_ideal(const FiniteAlgebra& alg, std::size_t i,
                                      std::size_t budget = kDefaultMinorBudget);

} // namespace laf

#endif
