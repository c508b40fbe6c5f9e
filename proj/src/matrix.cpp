#include "laf/matrix.hpp"

namespace laf {

namespace {

Poly det_cofactor_rec(const BaseMatrix& m, std::vector<std::size_t>& rows,
                      std::vector<std::size_t>& cols) {
    std::size_t n = rows.size();
    if (n == 1) return m.at(rows[0], cols[0]);
    Poly acc(m.ring());
    std::size_t top = rows[0];
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < n; ++j) {
        const Poly& pivot = m.at(top, cols[j]);
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(n - 1);
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        Poly sub = det_cofactor_rec(m, sub_rows, sub_cols);
        Poly term = pivot * sub;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

Poly det_cofactor(const BaseMatrix& m) {
    if (m.rows() != m.cols()) throw input_error("determinant of non-square matrix");
    if (m.rows() == 0) return Poly::constant(m.ring(), Rational(1));
    std::vector<std::size_t> rows(m.rows()), cols(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = cols[i] = i;
    return det_cofactor_rec(m, rows, cols);
}

Poly det_bareiss(const BaseMatrix& m) {
    if (m.rows() != m.cols()) throw input_error("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Poly::constant(m.ring(), Rational(1));
    BaseMatrix w = m;
    int sign = 1;
    Poly prev = Poly::constant(m.ring(), Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && w.at(r, k).is_zero()) ++r;
            if (r == n) return Poly(m.ring());  // zero column, singular
            for (std::size_t j = k; j < n; ++j) std::swap(w.at(k, j), w.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = divide_exact(num, prev);
            }
            w.at(i, k) = Poly(m.ring());
        }
        prev = w.at(k, k);
    }
    Poly d = w.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

Poly det_base_matrix(const BaseMatrix& m) {
    if (m.rows() != m.cols()) throw input_error("determinant of non-square matrix");
    return m.rows() <= 3 ? det_cofactor(m) : det_bareiss(m);
}

namespace {

// next k-subset of {0..n-1} in lexicographic order
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
    std::size_t k = s.size();
    for (std::size_t i = k; i-- > 0;) {
        if (s[i] < n - k + i) {
            ++s[i];
            for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::size_t binom(std::size_t n, std::size_t k, std::size_t cap) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
        if (r > cap) return cap + 1;
    }
    return r;
}

} // namespace

std::vector<Poly> minors(const BaseMatrix& m, std::size_t k, std::size_t budget) {
    if (k == 0 || k > m.rows() || k > m.cols())
        throw input_error("minor order out of range");
    std::size_t nr = binom(m.rows(), k, budget);
    std::size_t nc = binom(m.cols(), k, budget);
    if (nr > budget / (nc ? nc : 1))
        throw compute_error(
            "minor budget exceeded (" + std::to_string(budget) +
            "); use sampled-rank stratification (stratify --chars) instead");

    std::vector<Poly> out;
    std::vector<std::size_t> rows(k), cols0(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    do {
        for (std::size_t i = 0; i < k; ++i) cols0[i] = i;
        std::vector<std::size_t> cols = cols0;
        do {
            BaseMatrix sub(m.ring(), k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub.at(i, j) = m.at(rows[i], cols[j]);
            out.push_back(det_base_matrix(sub));
        } while (next_subset(cols, m.cols()));
    } while (next_subset(rows, m.rows()));
    return out;
}

} // namespace laf
