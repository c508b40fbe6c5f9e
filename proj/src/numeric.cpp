#include "laf/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "laf/errors.hpp"

namespace laf {

EchelonExact echelon_exact(QMat a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    EchelonExact out;
    std::vector<bool> is_pivot(cols, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rational inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        out.pivot_cols.push_back(c);
        is_pivot[c] = true;
        ++r;
    }
    out.rank = r;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols, Rational(0));
        v[c] = Rational(1);
        for (std::size_t i = 0; i < out.pivot_cols.size(); ++i)
            v[out.pivot_cols[i]] = -a[i][c];
        out.kernel.push_back(std::move(v));
    }
    return out;
}

EchelonFloat echelon_float(CMat a, double pivot_threshold) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    EchelonFloat out;
    std::vector<bool> is_pivot(cols, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        double best = std::abs(a[r][c]);
        for (std::size_t i = r + 1; i < rows; ++i)
            if (std::abs(a[i][c]) > best) { best = std::abs(a[i][c]); p = i; }
        if (best <= pivot_threshold) continue;
        std::swap(a[p], a[r]);
        std::complex<double> inv = 1.0 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        a[r][c] = 1.0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::complex<double> f = a[i][c];
            if (f == std::complex<double>(0.0, 0.0)) continue;
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            a[i][c] = 0.0;
        }
        out.pivot_cols.push_back(c);
        is_pivot[c] = true;
        ++r;
    }
    out.rank = r;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        CVec v(cols, 0.0);
        v[c] = 1.0;
        for (std::size_t i = 0; i < out.pivot_cols.size(); ++i)
            v[out.pivot_cols[i]] = -a[i][c];
        out.kernel.push_back(std::move(v));
    }
    return out;
}

QVec solve_exact(QMat a, QVec b) {
    std::size_t n = a.size();
    if (n == 0 || a[0].size() != n || b.size() != n)
        throw input_error("solve_exact needs a square system");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) throw compute_error("singular exact linear system");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        Rational inv = a[c][c].inverse();
        for (std::size_t j = c; j < n; ++j) a[c][j] *= inv;
        b[c] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    return b;
}

CVec solve_float(CMat a, CVec b, double pivot_threshold) {
    std::size_t n = a.size();
    if (n == 0 || a[0].size() != n || b.size() != n)
        throw input_error("solve_float needs a square system");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        double best = std::abs(a[c][c]);
        for (std::size_t i = c + 1; i < n; ++i)
            if (std::abs(a[i][c]) > best) { best = std::abs(a[i][c]); p = i; }
        if (best <= pivot_threshold) throw compute_error("singular float linear system");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        std::complex<double> inv = 1.0 / a[c][c];
        for (std::size_t j = c; j < n; ++j) a[c][j] *= inv;
        b[c] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            std::complex<double> f = a[i][c];
            if (f == std::complex<double>(0.0, 0.0)) continue;
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    return b;
}

// ---------------------------------------------------------------------------
// Eigenvalues: complex Hessenberg + explicitly shifted QR with deflation.

namespace {

using C = std::complex<double>;

struct Givens {
    double c;
    C s;
};

Givens make_givens(C a, C b) {
    double aa = std::abs(a), bb = std::abs(b);
    if (bb == 0.0) return {1.0, C(0.0, 0.0)};
    if (aa == 0.0) return {0.0, C(1.0, 0.0)};
    double r = std::hypot(aa, bb);
    return {aa / r, (a / aa) * std::conj(b) / r};
}

void hessenberg(CMat& h) {
    std::size_t n = h.size();
    for (std::size_t k = 0; k + 2 < n; ++k) {
        // Householder vector for column k below the subdiagonal
        double scale = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) scale += std::abs(h[i][k]);
        if (scale == 0.0) continue;
        CVec v(n, 0.0);
        double norm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = h[i][k] / scale;
            norm2 += std::norm(v[i]);
        }
        double alpha = std::sqrt(norm2);
        if (alpha == 0.0) continue;
        C phase = std::abs(v[k + 1]) == 0.0 ? C(1.0, 0.0) : v[k + 1] / std::abs(v[k + 1]);
        C beta = -phase * alpha;
        v[k + 1] -= beta;
        double vv = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) vv += std::norm(v[i]);
        if (vv == 0.0) continue;
        // H <- (I - 2 v v^H / vv) H (left), then right
        for (std::size_t j = k; j < n; ++j) {
            C dot(0.0, 0.0);
            for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h[i][j];
            dot *= 2.0 / vv;
            for (std::size_t i = k + 1; i < n; ++i) h[i][j] -= dot * v[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            C dot(0.0, 0.0);
            for (std::size_t j = k + 1; j < n; ++j) dot += h[i][j] * v[j];
            dot *= 2.0 / vv;
            for (std::size_t j = k + 1; j < n; ++j) h[i][j] -= dot * std::conj(v[j]);
        }
        for (std::size_t i = k + 2; i < n; ++i) h[i][k] = 0.0;
    }
}

C wilkinson_shift(const CMat& h, std::size_t m) {
    C a = h[m - 1][m - 1], b = h[m - 1][m], c = h[m][m - 1], d = h[m][m];
    C tr2 = (a - d) * 0.5;
    C disc = std::sqrt(tr2 * tr2 + b * c);
    C l1 = d + tr2 + disc, l2 = d + tr2 - disc;
    return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

} // namespace

CVec eigenvalues(CMat a) {
    std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw input_error("eigenvalues of non-square matrix");
    if (n == 0) return {};
    if (n == 1) return {a[0][0]};

    hessenberg(a);
    CVec out;
    out.reserve(n);

    double anorm = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) anorm = std::max(anorm, std::abs(a[i][j]));
    if (anorm == 0.0) return CVec(n, 0.0);
    const double tiny = 1e-300;

    std::size_t hi = n - 1;
    std::size_t iters = 0, max_iters = 60 * n;
    while (true) {
        // deflate converged subdiagonals
        while (hi > 0) {
            double s = std::abs(a[hi - 1][hi - 1]) + std::abs(a[hi][hi]);
            if (s == 0.0) s = anorm;
            if (std::abs(a[hi][hi - 1]) <= 1e-15 * s + tiny) {
                a[hi][hi - 1] = 0.0;
                out.push_back(a[hi][hi]);
                --hi;
            } else {
                break;
            }
        }
        if (hi == 0) {
            out.push_back(a[0][0]);
            break;
        }
        // active block [lo, hi]
        std::size_t lo = hi;
        while (lo > 0) {
            double s = std::abs(a[lo - 1][lo - 1]) + std::abs(a[lo][lo]);
            if (s == 0.0) s = anorm;
            if (std::abs(a[lo][lo - 1]) <= 1e-15 * s + tiny) {
                a[lo][lo - 1] = 0.0;
                break;
            }
            --lo;
        }
        if (++iters > max_iters)
            throw compute_error("QR eigenvalue iteration failed to converge");

        C mu = wilkinson_shift(a, hi);
        if (iters % 17 == 0)  // occasional exceptional shift to break cycles
            mu = a[hi][hi] + C(std::abs(a[hi][hi - 1]), 0.0);

        for (std::size_t i = lo; i <= hi; ++i) a[i][i] -= mu;
        std::vector<Givens> rots;
        rots.reserve(hi - lo);
        for (std::size_t k = lo; k < hi; ++k) {
            Givens g = make_givens(a[k][k], a[k + 1][k]);
            rots.push_back(g);
            for (std::size_t j = k; j <= hi; ++j) {
                C x = a[k][j], y = a[k + 1][j];
                a[k][j] = g.c * x + g.s * y;
                a[k + 1][j] = -std::conj(g.s) * x + g.c * y;
            }
        }
        for (std::size_t k = lo; k < hi; ++k) {
            const Givens& g = rots[k - lo];
            std::size_t top = std::min(k + 2, hi);
            for (std::size_t i = lo; i <= top; ++i) {
                C x = a[i][k], y = a[i][k + 1];
                a[i][k] = g.c * x + std::conj(g.s) * y;
                a[i][k + 1] = -g.s * x + g.c * y;
            }
        }
        for (std::size_t i = lo; i <= hi; ++i) a[i][i] += mu;
    }
    return out;
}

std::vector<std::vector<std::size_t>> cluster_by_radius(const CVec& vals, double radius) {
    std::size_t n = vals.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(vals[i] - vals[j]) <= radius) parent[find(i)] = find(j);

    std::vector<std::vector<std::size_t>> groups;
    std::vector<long> group_of(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        if (group_of[r] < 0) {
            group_of[r] = static_cast<long>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(group_of[r])].push_back(i);
    }
    auto key = [&](const std::vector<std::size_t>& g) {
        C best = vals[g[0]];
        for (auto i : g) {
            C v = vals[i];
            if (v.real() < best.real() ||
                (v.real() == best.real() && v.imag() < best.imag()))
                best = v;
        }
        return best;
    };
    std::sort(groups.begin(), groups.end(), [&](const auto& x, const auto& y) {
        C a = key(x), b = key(y);
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    return groups;
}

} // namespace laf
