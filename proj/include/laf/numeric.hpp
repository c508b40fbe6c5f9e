#ifndef LAF_NUMERIC_HPP
#define LAF_NUMERIC_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "laf/rational.hpp"

namespace laf {

using CVec = std::vector<std::complex<double>>;
using CMat = std::vector<CVec>;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

struct EchelonExact {
    std::vector<QVec> kernel;           // basis of the null space
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

struct EchelonFloat {
    std::vector<CVec> kernel;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Exact Gauss-Jordan elimination (first-nonzero pivoting, deterministic).
EchelonExact echelon_exact(QMat a);

/// Row reduction with partial pivoting; entries whose absolute value is at
/// most pivot_threshold are treated as zero.
EchelonFloat echelon_float(CMat a, double pivot_threshold);

/// Solves a square system; throws compute_error when singular.
QVec solve_exact(QMat a, QVec b);
CVec solve_float(CMat a, CVec b, double pivot_threshold = 0.0);

/// All eigenvalues of a dense complex matrix: Householder reduction to
/// Hessenberg form followed by the shifted QR iteration.
CVec eigenvalues(CMat a);

/// Groups values into connected components of the "distance <= radius"
/// graph. Deterministic: clusters are sorted by their smallest member
/// (lexicographic on (re, im)).
std::vector<std::vector<std::size_t>> cluster_by_radius(const CVec& vals, double radius);

} // namespace laf

#endif
