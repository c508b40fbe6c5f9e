#ifndef LAF_FIBER_HPP
#define LAF_FIBER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laf/algebra.hpp"
#include "laf/numeric.hpp"
#include "laf/scalar.hpp"

namespace laf {

enum class Mode { exact, floating };

/// A point of Spec of the base ring: a value for every base variable.
/// Laurent variables must be nonzero. In exact mode every value is an exact
/// rational; tolerance applies only in float mode.
struct Character {
    std::map<std::string, Scalar> values;
    Mode mode = Mode::exact;
    double tolerance = 1e-9;
};

void validate_character(const Character& chi, const RingDescriptor& ring);

/// The fibre of a FiniteAlgebra at a character: structure constants, unit
/// and Gram matrix evaluated to Scalars. The stored Gram matrix is
/// recomputed from the specialized constants; specialize() verifies it
/// against the specialized symbolic Gram entries.
struct SpecializedAlgebra {
    std::size_t rank = 0;
    Mode mode = Mode::exact;
    double tolerance = 1e-9;
    std::vector<Scalar> unit;
    std::vector<std::vector<std::vector<Scalar>>> mul;  // [i][j] -> coords
    std::vector<std::vector<Scalar>> gram;
};

SpecializedAlgebra specialize(const FiniteAlgebra& alg, const Character& chi);

std::vector<Scalar> mul_specialized(const SpecializedAlgebra& s,
                                    const std::vector<Scalar>& u,
                                    const std::vector<Scalar>& v);

/// Kernel basis of the specialized Gram matrix (the Jacobson radical in
/// characteristic zero). Exact elimination in exact mode; float mode uses
/// pivot threshold = tolerance * (max absolute Gram entry).
std::vector<std::vector<Scalar>> radical_basis(const SpecializedAlgebra& s);

/// Semisimple quotient on the complement basis (pivot columns of the Gram
/// row reduction), with the projection from the original coordinates.
struct QuotientData {
    SpecializedAlgebra quotient;
    std::vector<std::size_t> pivot_cols;
    std::size_t radical_dim = 0;
    /// projection[k][j]: coefficient of quotient basis k in the image of e_j.
    std::vector<std::vector<Scalar>> projection;
    std::vector<std::vector<Scalar>> radical;  // kernel basis, original coords
};

QuotientData semisimple_quotient_data(const SpecializedAlgebra& s);
SpecializedAlgebra semisimple_quotient(const SpecializedAlgebra& s);

/// Wedderburn block sizes of a semisimple quotient plus per-block trace
/// vectors pulled back to the original basis. Uses a random central element
/// with rational coefficients drawn from {-99..99}/{1..9}; the seed is
/// recorded. Retries with a fresh element up to 5 times before failing.
struct WedderburnResult {
    std::vector<std::size_t> blocks;  // ascending, sum of squares = quotient rank
    std::vector<std::vector<std::complex<double>>> trace_vectors;  // r x n
    std::uint64_t seed = 0;
    int attempts = 1;
};

WedderburnResult wedderburn(const QuotientData& q, std::uint64_t seed);

std::vector<std::size_t> wedderburn_blocks(const SpecializedAlgebra& s, std::uint64_t seed);

/// Per-block trace vectors alone (the blocks come along for free).
inline std::vector<std::vector<std::complex<double>>> trace_vectors(const QuotientData& q,
                                                                    std::uint64_t seed) {
    return wedderburn(q, seed).trace_vectors;
}

/// Full point-level pipeline output.
struct FiberReport {
    std::size_t rank = 0;
    std::size_t radical_dim = 0;
    std::vector<std::vector<Scalar>> radical_basis;
    std::vector<std::size_t> blocks;
    std::size_t num_simples = 0;
    std::vector<std::vector<std::complex<double>>> trace_vectors;
    std::size_t stratum_index = 0;  // = radical_dim
    bool in_X0 = false;
    Scalar discriminant_value;
    std::uint64_t seed = 0;
    Mode mode = Mode::exact;
};

/// Runs specialize / radical / quotient / blocks / trace vectors and checks
/// the discriminant criterion against the radical rank. `disc_hint` skips
/// recomputing the symbolic discriminant when the caller already has it.
FiberReport fiber(const FiniteAlgebra& alg, const Character& chi,
                  std::uint64_t seed = 1, const Poly* disc_hint = nullptr);

struct StratumEntry {
    Character chi;
    std::optional<std::size_t> index;  // absent when the point errored
    std::string error;
};

/// Radical dimension per character, sorted by stratum index (errors last).
std::vector<StratumEntry> stratum_scan(const FiniteAlgebra& alg,
                                       const std::vector<Character>& chars);

} // namespace laf

#endif
