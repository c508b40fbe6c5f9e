#ifndef LAF_MATRIX_HPP
#define LAF_MATRIX_HPP

#include <vector>

#include "laf/poly.hpp"

namespace laf {

/// Rectangular matrix of Polys over one base ring.
class BaseMatrix {
public:
    BaseMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          a_(rows * cols, Poly(ring_)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const RingPtr& ring() const { return ring_; }

    Poly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const BaseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    RingPtr ring_;
    std::size_t rows_, cols_;
    std::vector<Poly> a_;
};

/// Exact determinant. Cofactor expansion for small matrices, fraction-free
/// Bareiss elimination (divisions are exact over the polynomial ring) above.
Poly det_base_matrix(const BaseMatrix& m);

/// The two routes, exposed separately so they can cross-check each other.
Poly det_cofactor(const BaseMatrix& m);
Poly det_bareiss(const BaseMatrix& m);

/// All k-minors (determinants of k x k submatrices). Throws compute_error
/// when the submatrix count exceeds `budget`.
std::vector<Poly> minors(const BaseMatrix& m, std::size_t k, std::size_t budget);

} // namespace laf

#endif
