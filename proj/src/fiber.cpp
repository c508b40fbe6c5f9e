#include "laf/fiber.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace laf {

namespace {

using C = std::complex<double>;

double max_abs(const std::vector<std::vector<Scalar>>& m) {
    double best = 0.0;
    for (const auto& row : m)
        for (const auto& x : row) best = std::max(best, x.abs());
    return best;
}

QMat to_qmat(const std::vector<std::vector<Scalar>>& m) {
    QMat out;
    out.reserve(m.size());
    for (const auto& row : m) {
        QVec r;
        r.reserve(row.size());
        for (const auto& x : row) r.push_back(x.rational());
        out.push_back(std::move(r));
    }
    return out;
}

CMat to_cmat(const std::vector<std::vector<Scalar>>& m) {
    CMat out;
    out.reserve(m.size());
    for (const auto& row : m) {
        CVec r;
        r.reserve(row.size());
        for (const auto& x : row) r.push_back(x.to_complex());
        out.push_back(std::move(r));
    }
    return out;
}

bool scalar_close(const Scalar& a, const Scalar& b, Mode mode, double tol) {
    if (mode == Mode::exact) return a.rational() == b.rational();
    return std::abs(a.to_complex() - b.to_complex()) <= tol;
}

std::vector<std::vector<Scalar>> gram_from_constants(
    std::size_t n, Mode mode,
    const std::vector<std::vector<std::vector<Scalar>>>& mul) {
    // tr(e_k) = sum_j mul[k][j][j], then tr(e_i e_j) by linearity
    std::vector<Scalar> basis_tr(n, mode == Mode::exact ? Scalar::exact(Rational(0))
                                                        : Scalar::floating(0.0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) basis_tr[k] = basis_tr[k] + mul[k][j][j];
    std::vector<std::vector<Scalar>> g(n, std::vector<Scalar>(n, basis_tr[0] - basis_tr[0]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar acc = basis_tr[0] - basis_tr[0];
            for (std::size_t k = 0; k < n; ++k) acc = acc + mul[i][j][k] * basis_tr[k];
            g[i][j] = acc;
        }
    return g;
}

} // namespace

void validate_character(const Character& chi, const RingDescriptor& ring) {
    for (const auto& v : ring.vars) {
        auto it = chi.values.find(v);
        if (it == chi.values.end())
            throw input_error("character does not assign variable '" + v + "'");
        if (chi.mode == Mode::exact && !it->second.is_exact())
            throw input_error("exact-mode character has a float value for '" + v + "'");
        if (ring.kind == RingKind::laurent && it->second.is_zero())
            throw input_error("laurent variable '" + v + "' assigned zero");
    }
    if (chi.tolerance < 0) throw input_error("negative tolerance");
}

SpecializedAlgebra specialize(const FiniteAlgebra& alg, const Character& chi) {
    validate_character(chi, *alg.base);
    SpecializedAlgebra s;
    s.rank = alg.rank;
    s.mode = chi.mode;
    s.tolerance = chi.tolerance;
    s.unit.reserve(alg.rank);
    for (const auto& c : alg.unit) s.unit.push_back(eval_poly(c, chi.values));
    s.mul.resize(alg.rank);
    for (std::size_t i = 0; i < alg.rank; ++i) {
        s.mul[i].resize(alg.rank);
        for (std::size_t j = 0; j < alg.rank; ++j) {
            s.mul[i][j].reserve(alg.rank);
            for (std::size_t k = 0; k < alg.rank; ++k)
                s.mul[i][j].push_back(eval_poly(alg.mul_table[i][j][k], chi.values));
        }
    }
    s.gram = gram_from_constants(s.rank, s.mode, s.mul);

    // the recomputed Gram must agree with the specialized symbolic Gram
    auto symbolic = gram_matrix(alg);
    double tol = s.tolerance * std::max(1.0, max_abs(s.gram));
    for (std::size_t i = 0; i < alg.rank; ++i)
        for (std::size_t j = 0; j < alg.rank; ++j) {
            Scalar expect = eval_poly(symbolic.at(i, j), chi.values);
            if (!scalar_close(expect, s.gram[i][j], s.mode, tol))
                throw compute_error(
                    "specialization consistency violation at Gram entry (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return s;
}

std::vector<Scalar> mul_specialized(const SpecializedAlgebra& s,
                                    const std::vector<Scalar>& u,
                                    const std::vector<Scalar>& v) {
    Scalar zero = s.mode == Mode::exact ? Scalar::exact(Rational(0)) : Scalar::floating(0.0);
    std::vector<Scalar> out(s.rank, zero);
    for (std::size_t i = 0; i < s.rank; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < s.rank; ++j) {
            if (v[j].is_zero()) continue;
            Scalar uv = u[i] * v[j];
            for (std::size_t k = 0; k < s.rank; ++k)
                out[k] = out[k] + uv * s.mul[i][j][k];
        }
    }
    return out;
}

std::vector<std::vector<Scalar>> radical_basis(const SpecializedAlgebra& s) {
    return semisimple_quotient_data(s).radical;
}

QuotientData semisimple_quotient_data(const SpecializedAlgebra& s) {
    QuotientData out;
    std::vector<std::vector<Scalar>> kernel;
    if (s.mode == Mode::exact) {
        auto ech = echelon_exact(to_qmat(s.gram));
        out.pivot_cols = ech.pivot_cols;
        for (auto& v : ech.kernel) {
            std::vector<Scalar> row;
            row.reserve(v.size());
            for (auto& x : v) row.push_back(Scalar::exact(std::move(x)));
            kernel.push_back(std::move(row));
        }
    } else {
        double thr = s.tolerance * max_abs(s.gram);
        auto ech = echelon_float(to_cmat(s.gram), thr);
        out.pivot_cols = ech.pivot_cols;
        for (auto& v : ech.kernel) {
            std::vector<Scalar> row;
            row.reserve(v.size());
            for (auto& x : v) row.push_back(Scalar::floating(x));
            kernel.push_back(std::move(row));
        }
    }
    out.radical = kernel;
    out.radical_dim = kernel.size();

    std::size_t n = s.rank;
    std::size_t m = out.pivot_cols.size();

    // basis matrix B = [pivot unit vectors | kernel vectors]; the projection
    // drops the kernel part of B^{-1}
    Scalar zero = s.mode == Mode::exact ? Scalar::exact(Rational(0)) : Scalar::floating(0.0);
    Scalar one = s.mode == Mode::exact ? Scalar::exact(Rational(1)) : Scalar::floating(1.0);
    std::vector<std::vector<Scalar>> B(n, std::vector<Scalar>(n, zero));
    for (std::size_t a = 0; a < m; ++a) B[out.pivot_cols[a]][a] = one;
    for (std::size_t b = 0; b < kernel.size(); ++b)
        for (std::size_t i = 0; i < n; ++i) B[i][m + b] = kernel[b][i];

    out.projection.assign(m, std::vector<Scalar>(n, zero));
    if (s.mode == Mode::exact) {
        QMat bq = to_qmat(B);
        for (std::size_t j = 0; j < n; ++j) {
            QVec e(n, Rational(0));
            e[j] = Rational(1);
            QVec z = solve_exact(bq, e);
            for (std::size_t k = 0; k < m; ++k) out.projection[k][j] = Scalar::exact(z[k]);
        }
    } else {
        CMat bc = to_cmat(B);
        for (std::size_t j = 0; j < n; ++j) {
            CVec e(n, 0.0);
            e[j] = 1.0;
            CVec z = solve_float(bc, e);
            for (std::size_t k = 0; k < m; ++k) out.projection[k][j] = Scalar::floating(z[k]);
        }
    }

    // quotient structure constants: project the products of complement
    // representatives
    auto& q = out.quotient;
    q.rank = m;
    q.mode = s.mode;
    q.tolerance = s.tolerance;
    auto project = [&](const std::vector<Scalar>& x) {
        std::vector<Scalar> r(m, zero);
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t i = 0; i < n; ++i) r[k] = r[k] + out.projection[k][i] * x[i];
        return r;
    };
    q.mul.assign(m, std::vector<std::vector<Scalar>>(m));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            std::vector<Scalar> ea(n, zero), eb(n, zero);
            ea[out.pivot_cols[a]] = one;
            eb[out.pivot_cols[b]] = one;
            q.mul[a][b] = project(mul_specialized(s, ea, eb));
        }
    }
    q.unit = project(s.unit);
    q.gram = gram_from_constants(m, q.mode, q.mul);
    return out;
}

SpecializedAlgebra semisimple_quotient(const SpecializedAlgebra& s) {
    return semisimple_quotient_data(s).quotient;
}

namespace {

// center of the quotient algebra as a list of coordinate vectors
std::vector<std::vector<Scalar>> center_basis(const SpecializedAlgebra& q) {
    std::size_t m = q.rank;
    Scalar zero = q.mode == Mode::exact ? Scalar::exact(Rational(0)) : Scalar::floating(0.0);
    // rows: for each basis i and coordinate k, sum_j z_j (c_{ji}^k - c_{ij}^k) = 0
    std::vector<std::vector<Scalar>> sys(m * m, std::vector<Scalar>(m, zero));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t j = 0; j < m; ++j)
                sys[i * m + k][j] = q.mul[j][i][k] - q.mul[i][j][k];
    std::vector<std::vector<Scalar>> out;
    if (q.mode == Mode::exact) {
        auto ech = echelon_exact(to_qmat(sys));
        for (auto& v : ech.kernel) {
            std::vector<Scalar> row;
            for (auto& x : v) row.push_back(Scalar::exact(std::move(x)));
            out.push_back(std::move(row));
        }
    } else {
        double thr = q.tolerance * std::max(1.0, max_abs(sys));
        auto ech = echelon_float(to_cmat(sys), thr);
        for (auto& v : ech.kernel) {
            std::vector<Scalar> row;
            for (auto& x : v) row.push_back(Scalar::floating(x));
            out.push_back(std::move(row));
        }
    }
    return out;
}

CMat left_mult_complex(const SpecializedAlgebra& q, const CVec& z) {
    std::size_t m = q.rank;
    CMat l(m, CVec(m, 0.0));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i) {
            if (z[i] == C(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < m; ++k)
                l[k][j] += z[i] * q.mul[i][j][k].to_complex();
        }
    return l;
}

bool perfect_square(std::size_t v, std::size_t& root) {
    std::size_t r = static_cast<std::size_t>(std::llround(std::sqrt(double(v))));
    for (std::size_t c = r > 0 ? r - 1 : 0; c <= r + 1; ++c)
        if (c * c == v) { root = c; return true; }
    return false;
}

} // namespace

WedderburnResult wedderburn(const QuotientData& qd, std::uint64_t seed) {
    const SpecializedAlgebra& q = qd.quotient;
    std::size_t m = q.rank;
    WedderburnResult res;
    res.seed = seed;
    if (m == 0) throw compute_error("wedderburn on a zero quotient");

    double tol_eff = q.mode == Mode::exact ? 1e-9 : q.tolerance;
    double radius = 1e3 * tol_eff;

    auto centre = center_basis(q);
    std::size_t r = centre.size();
    if (r == 0) throw compute_error("quotient has an empty center (bug)");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-99, 99), den(1, 9);
    std::ostringstream diag;

    for (int attempt = 1; attempt <= 5; ++attempt) {
        res.attempts = attempt;
        CVec z(m, 0.0);
        for (std::size_t l = 0; l < r; ++l) {
            double c = double(num(rng)) / double(den(rng));
            for (std::size_t i = 0; i < m; ++i) z[i] += c * centre[l][i].to_complex();
        }
        CMat lz = left_mult_complex(q, z);
        CVec eig;
        try {
            eig = eigenvalues(lz);
        } catch (const compute_error& e) {
            diag << "attempt " << attempt << ": " << e.what() << "\n";
            continue;
        }
        auto groups = cluster_by_radius(eig, radius);
        if (groups.size() != r) {
            diag << "attempt " << attempt << ": " << groups.size()
                 << " eigenvalue clusters but center dimension " << r << "\n";
            continue;
        }
        std::vector<std::size_t> blocks;
        bool ok = true;
        std::size_t total = 0;
        for (const auto& g : groups) {
            std::size_t root = 0;
            if (!perfect_square(g.size(), root)) {
                diag << "attempt " << attempt << ": cluster of size " << g.size()
                     << " is not a perfect square\n";
                ok = false;
                break;
            }
            blocks.push_back(root);
            total += g.size();
        }
        if (!ok) continue;
        if (total != m) {
            diag << "attempt " << attempt << ": cluster sizes sum to " << total
                 << " != " << m << "\n";
            continue;
        }

        // spectral projectors by Lagrange interpolation on the cluster means
        CVec means;
        for (const auto& g : groups) {
            C s(0.0, 0.0);
            for (auto i : g) s += eig[i];
            means.push_back(s / double(g.size()));
        }
        std::vector<CMat> projs;
        for (std::size_t a = 0; a < groups.size(); ++a) {
            CMat p(m, CVec(m, 0.0));
            for (std::size_t i = 0; i < m; ++i) p[i][i] = 1.0;
            for (std::size_t b = 0; b < groups.size(); ++b) {
                if (a == b) continue;
                C denom = means[a] - means[b];
                CMat nxt(m, CVec(m, 0.0));
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j) {
                        C acc = -means[b] * p[i][j];
                        for (std::size_t k = 0; k < m; ++k) acc += p[i][k] * lz[k][j];
                        nxt[i][j] = acc / denom;
                    }
                p = std::move(nxt);
            }
            projs.push_back(std::move(p));
        }

        // trace vectors on the original basis: tr_{V_a}(e_j) =
        // tr(L_{proj(e_j)} P_a) / n_a
        std::size_t n = qd.projection.empty() ? m : qd.projection[0].size();
        res.trace_vectors.assign(groups.size(), std::vector<C>(n, 0.0));
        for (std::size_t j = 0; j < n; ++j) {
            CVec img(m, 0.0);
            for (std::size_t k = 0; k < m; ++k) img[k] = qd.projection[k][j].to_complex();
            CMat lj = left_mult_complex(q, img);
            for (std::size_t a = 0; a < groups.size(); ++a) {
                C tr(0.0, 0.0);
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t k = 0; k < m; ++k) tr += lj[i][k] * projs[a][k][i];
                res.trace_vectors[a][j] = tr / double(blocks[a]);
            }
        }

        // sort blocks ascending, carrying trace vectors along
        std::vector<std::size_t> order(blocks.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return blocks[x] < blocks[y]; });
        std::vector<std::size_t> sorted_blocks;
        std::vector<std::vector<C>> sorted_tv;
        for (auto i : order) {
            sorted_blocks.push_back(blocks[i]);
            sorted_tv.push_back(std::move(res.trace_vectors[i]));
        }
        res.blocks = std::move(sorted_blocks);
        res.trace_vectors = std::move(sorted_tv);

        if (res.blocks.size() >= 2) {
            double min_dist = 1e300;
            for (std::size_t a = 0; a < res.blocks.size(); ++a)
                for (std::size_t b = a + 1; b < res.blocks.size(); ++b) {
                    double d = 0.0;
                    for (std::size_t j = 0; j < res.trace_vectors[a].size(); ++j)
                        d = std::max(d, std::abs(res.trace_vectors[a][j] -
                                                 res.trace_vectors[b][j]));
                    min_dist = std::min(min_dist, d);
                }
            if (min_dist <= radius)
                throw compute_error(
                    "trace vectors of distinct simple modules are indistinct "
                    "(min distance " + std::to_string(min_dist) + ")");
        }
        return res;
    }
    throw compute_error("wedderburn block clustering failed after 5 attempts:\n" +
                        diag.str());
}

std::vector<std::size_t> wedderburn_blocks(const SpecializedAlgebra& s, std::uint64_t seed) {
    QuotientData qd;
    qd.quotient = s;
    qd.radical_dim = 0;
    std::size_t n = s.rank;
    Scalar zero = s.mode == Mode::exact ? Scalar::exact(Rational(0)) : Scalar::floating(0.0);
    Scalar one = s.mode == Mode::exact ? Scalar::exact(Rational(1)) : Scalar::floating(1.0);
    qd.projection.assign(n, std::vector<Scalar>(n, zero));
    for (std::size_t i = 0; i < n; ++i) {
        qd.projection[i][i] = one;
        qd.pivot_cols.push_back(i);
    }
    return wedderburn(qd, seed).blocks;
}

FiberReport fiber(const FiniteAlgebra& alg, const Character& chi, std::uint64_t seed,
                  const Poly* disc_hint) {
    Poly disc = disc_hint ? *disc_hint : discriminant(alg);

    FiberReport rep;
    rep.rank = alg.rank;
    rep.mode = chi.mode;
    rep.seed = seed;

    auto s = specialize(alg, chi);
    auto qd = semisimple_quotient_data(s);
    rep.radical_dim = qd.radical_dim;
    rep.radical_basis = qd.radical;
    rep.stratum_index = qd.radical_dim;

    auto wed = wedderburn(qd, seed);
    rep.blocks = wed.blocks;
    rep.num_simples = wed.blocks.size();
    rep.trace_vectors = wed.trace_vectors;

    std::size_t sq = 0;
    for (auto b : rep.blocks) sq += b * b;
    if (sq + rep.radical_dim != alg.rank)
        throw compute_error("fiber accounting violated: sum n_i^2 + radical_dim = " +
                            std::to_string(sq + rep.radical_dim) + " != rank " +
                            std::to_string(alg.rank));

    rep.discriminant_value = eval_poly(disc, chi.values);
    bool disc_nonzero;
    if (chi.mode == Mode::exact) {
        disc_nonzero = !rep.discriminant_value.is_zero();
        if (disc_nonzero != (rep.radical_dim == 0))
            throw compute_error("discriminant criterion disagrees with radical rank (bug)");
    } else {
        disc_nonzero = rep.discriminant_value.abs() > chi.tolerance;
        if (disc_nonzero != (rep.radical_dim == 0))
            throw compute_error(
                "discriminant criterion and radical rank disagree within float "
                "tolerance of the zero locus; tighten the tolerance or move the "
                "character");
    }
    rep.in_X0 = disc_nonzero;
    return rep;
}

std::vector<StratumEntry> stratum_scan(const FiniteAlgebra& alg,
                                       const std::vector<Character>& chars) {
    std::vector<StratumEntry> out;
    out.reserve(chars.size());
    for (const auto& chi : chars) {
        StratumEntry e;
        e.chi = chi;
        try {
            auto s = specialize(alg, chi);
            e.index = semisimple_quotient_data(s).radical_dim;
        } catch (const std::exception& ex) {
            e.error = ex.what();
        }
        out.push_back(std::move(e));
    }
    std::stable_sort(out.begin(), out.end(), [](const StratumEntry& a, const StratumEntry& b) {
        if (a.index.has_value() != b.index.has_value()) return a.index.has_value();
        if (!a.index) return false;
        return *a.index < *b.index;
    });
    return out;
}

} // namespace laf
