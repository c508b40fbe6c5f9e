#include "laf/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace laf {

namespace {

std::vector<Poly> zero_coords(const RingPtr& ring, std::size_t n) {
    return std::vector<Poly>(n, Poly(ring));
}

std::vector<Poly> mul_coords(const FiniteAlgebra& alg, const std::vector<Poly>& u,
                             const std::vector<Poly>& v) {
    auto out = zero_coords(alg.base, alg.rank);
    for (std::size_t i = 0; i < alg.rank; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < alg.rank; ++j) {
            if (v[j].is_zero()) continue;
            Poly uv = u[i] * v[j];
            const auto& cij = alg.mul_table[i][j];
            for (std::size_t k = 0; k < alg.rank; ++k)
                if (!cij[k].is_zero()) out[k] = out[k] + uv * cij[k];
        }
    }
    return out;
}

bool coords_equal(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    return a == b;
}

} // namespace

void validate(const FiniteAlgebra& alg) {
    std::vector<std::string> problems;
    if (alg.rank == 0) problems.push_back("rank must be positive");
    if (!alg.base) problems.push_back("missing base ring");
    if (alg.basis_names.size() != alg.rank)
        problems.push_back("basis_names size != rank");
    if (alg.unit.size() != alg.rank) problems.push_back("unit vector size != rank");
    if (alg.mul_table.size() != alg.rank)
        problems.push_back("mul table row count != rank");
    for (std::size_t i = 0; i < alg.mul_table.size(); ++i) {
        if (alg.mul_table[i].size() != alg.rank) {
            problems.push_back("mul table row " + std::to_string(i) + " malformed");
            continue;
        }
        for (std::size_t j = 0; j < alg.rank; ++j)
            if (alg.mul_table[i][j].size() != alg.rank)
                problems.push_back("mul table entry (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") malformed");
    }
    if (!problems.empty())
        throw input_error("invalid algebra: " + problems.front());

    bool unit_zero = true;
    for (const auto& c : alg.unit) unit_zero = unit_zero && c.is_zero();
    if (unit_zero) problems.push_back("unit vector is zero");

    // e_i * unit = unit * e_i = e_i
    for (std::size_t i = 0; i < alg.rank && problems.size() < 32; ++i) {
        auto ei = zero_coords(alg.base, alg.rank);
        ei[i] = Poly::constant(alg.base, Rational(1));
        if (!coords_equal(mul_coords(alg, alg.unit, ei), ei))
            problems.push_back("unit * e_" + std::to_string(i) + " != e_" + std::to_string(i));
        if (!coords_equal(mul_coords(alg, ei, alg.unit), ei))
            problems.push_back("e_" + std::to_string(i) + " * unit != e_" + std::to_string(i));
    }

    // associativity on basis triples
    for (std::size_t i = 0; i < alg.rank; ++i) {
        for (std::size_t j = 0; j < alg.rank; ++j) {
            auto ej = zero_coords(alg.base, alg.rank);
            ej[j] = Poly::constant(alg.base, Rational(1));
            for (std::size_t k = 0; k < alg.rank && problems.size() < 32; ++k) {
                auto ek = zero_coords(alg.base, alg.rank);
                ek[k] = Poly::constant(alg.base, Rational(1));
                auto lhs = mul_coords(alg, alg.mul_table[i][j], ek);
                auto ei = zero_coords(alg.base, alg.rank);
                ei[i] = Poly::constant(alg.base, Rational(1));
                auto rhs = mul_coords(alg, ei, alg.mul_table[j][k]);
                if (!coords_equal(lhs, rhs))
                    problems.push_back("associativity fails at (e_" + std::to_string(i) +
                                       ", e_" + std::to_string(j) + ", e_" +
                                       std::to_string(k) + ")");
            }
        }
    }

    if (alg.commutative) {
        for (std::size_t i = 0; i < alg.rank; ++i)
            for (std::size_t j = i + 1; j < alg.rank && problems.size() < 32; ++j)
                if (!coords_equal(alg.mul_table[i][j], alg.mul_table[j][i]))
                    problems.push_back("declared commutative but e_" + std::to_string(i) +
                                       " e_" + std::to_string(j) + " != e_" +
                                       std::to_string(j) + " e_" + std::to_string(i));
    }

    if (!problems.empty()) {
        std::ostringstream msg;
        msg << "invalid algebra:";
        for (const auto& p : problems) msg << "\n  - " << p;
        throw input_error(msg.str());
    }
}

AlgebraPtr make_algebra(FiniteAlgebra alg) {
    validate(alg);
    return std::make_shared<const FiniteAlgebra>(std::move(alg));
}

AlgebraElement element(const AlgebraPtr& alg, std::vector<Poly> coords) {
    if (coords.size() != alg->rank) throw input_error("element coordinate size != rank");
    for (const auto& c : coords) require_same_ring(c.ring(), alg->base, "element coords");
    return AlgebraElement{alg, std::move(coords)};
}

AlgebraElement basis_element(const AlgebraPtr& alg, std::size_t i) {
    auto c = zero_coords(alg->base, alg->rank);
    c.at(i) = Poly::constant(alg->base, Rational(1));
    return AlgebraElement{alg, std::move(c)};
}

AlgebraElement unit_element(const AlgebraPtr& alg) {
    return AlgebraElement{alg, alg->unit};
}

AlgebraElement scale(const Poly& c, const AlgebraElement& u) {
    auto out = u;
    for (auto& x : out.coords) x = c * x;
    return out;
}

AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v) {
    if (u.alg != v.alg) throw input_error("algebra mismatch in add");
    auto out = u;
    for (std::size_t i = 0; i < out.coords.size(); ++i)
        out.coords[i] = out.coords[i] + v.coords[i];
    return out;
}

AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v) {
    if (u.alg != v.alg) throw input_error("algebra mismatch in mul");
    return AlgebraElement{u.alg, mul_coords(*u.alg, u.coords, v.coords)};
}

bool element_is_zero(const AlgebraElement& u) {
    for (const auto& c : u.coords)
        if (!c.is_zero()) return false;
    return true;
}

BaseMatrix left_mult_matrix(const FiniteAlgebra& alg, const std::vector<Poly>& coords) {
    BaseMatrix m(alg.base, alg.rank, alg.rank);
    for (std::size_t j = 0; j < alg.rank; ++j) {
        auto ej = zero_coords(alg.base, alg.rank);
        ej[j] = Poly::constant(alg.base, Rational(1));
        auto col = mul_coords(alg, coords, ej);
        for (std::size_t i = 0; i < alg.rank; ++i) m.at(i, j) = std::move(col[i]);
    }
    return m;
}

Poly trace(const AlgebraElement& u) {
    auto m = left_mult_matrix(u);
    Poly t(u.alg->base);
    for (std::size_t i = 0; i < m.rows(); ++i) t = t + m.at(i, i);
    return t;
}

Poly norm(const AlgebraElement& u) {
    return det_base_matrix(left_mult_matrix(u));
}

BaseMatrix gram_matrix(const FiniteAlgebra& alg) {
    // tr(e_i e_j) without forming n^2 full products: tr of the coordinate
    // vector c is sum_k c_k * tr(e_k).
    std::vector<Poly> basis_traces;
    basis_traces.reserve(alg.rank);
    for (std::size_t k = 0; k < alg.rank; ++k) {
        Poly t(alg.base);
        for (std::size_t j = 0; j < alg.rank; ++j) t = t + alg.mul_table[k][j][j];
        basis_traces.push_back(std::move(t));
    }
    BaseMatrix g(alg.base, alg.rank, alg.rank);
    for (std::size_t i = 0; i < alg.rank; ++i) {
        for (std::size_t j = 0; j < alg.rank; ++j) {
            Poly t(alg.base);
            const auto& cij = alg.mul_table[i][j];
            for (std::size_t k = 0; k < alg.rank; ++k)
                if (!cij[k].is_zero()) t = t + cij[k] * basis_traces[k];
            g.at(i, j) = std::move(t);
        }
    }
    return g;
}

Poly discriminant(const FiniteAlgebra& alg) {
    return normalize_up_to_unit(det_base_matrix(gram_matrix(alg)));
}

std::vector<Poly> determinantal_ideal(const FiniteAlgebra& alg, std::size_t i,
                                      std::size_t budget) {
    if (i < 1 || i > alg.rank)
        throw input_error("determinantal ideal index out of range (1.." +
                          std::to_string(alg.rank) + ")");
    auto g = gram_matrix(alg);
    auto ms = minors(g, alg.rank - i + 1, budget);

    std::vector<Poly> gens;
    for (auto& m : ms) {
        if (m.is_zero()) continue;
        Poly n = normalize_up_to_unit(m);
        if (std::find(gens.begin(), gens.end(), n) == gens.end())
            gens.push_back(std::move(n));
    }
    if (gens.empty()) return {Poly(alg.base)};  // zero ideal
    for (const auto& g2 : gens)
        if (g2.is_constant())  // normalized nonzero constant is 1
            return {Poly::constant(alg.base, Rational(1))};
    std::sort(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) {
        return format_poly(a) < format_poly(b);
    });
    return gens;
}

} // namespace laf
