#ifndef LAF_POLY_HPP
#define LAF_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laf/rational.hpp"
#include "laf/ring.hpp"
#include "laf/scalar.hpp"

namespace laf {

/// One exponent per ring variable; negatives only in laurent rings.
using Exponents = std::vector<std::int64_t>;

/// Graded-lexicographic order (total degree first, then lex in the
/// descriptor's variable order). Total on exponent vectors of equal length.
bool grlex_less(const Exponents& a, const Exponents& b);

/// Multivariate Laurent/ordinary polynomial with exact rational
/// coefficients. Canonical: no stored zero coefficients. Two Polys are
/// equal iff their rings match and their term maps are equal. Immutable
/// in spirit: arithmetic returns fresh values.
class Poly {
public:
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, Rational c);
    static Poly monomial(RingPtr ring, Exponents e, Rational c);
    static Poly variable(RingPtr ring, const std::string& name, std::int64_t exp = 1);

    const RingPtr& ring() const { return ring_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_zero_exps(terms_.begin()->first));
    }
    /// Value as a constant (zero Poly gives 0); error if not constant.
    Rational constant_value() const;

    /// Leading (grlex-maximal) term; error on zero.
    std::pair<Exponents, Rational> leading_term() const;

    std::int64_t min_exponent(std::size_t var) const;  // over the support; 0 on zero Poly

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend Poly operator*(const Rational& c, const Poly& p);

    friend bool operator==(const Poly& a, const Poly& b) {
        return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Remaps exponent vectors through f (used for Weyl actions and
    /// lattice embeddings). f must be injective on the support.
    template <typename F>
    Poly map_exponents(F&& f) const {
        Poly out(ring_);
        for (const auto& [e, c] : terms_) out.add_term(f(e), c);
        return out;
    }

private:
    static bool is_zero_exps(const Exponents& e) {
        for (auto x : e) if (x != 0) return false;
        return true;
    }
    void add_term(const Exponents& e, const Rational& c);
    void check_exponents(const Exponents& e) const;

    RingPtr ring_;
    std::map<Exponents, Rational> terms_;

    friend Poly poly_pow(const Poly&, std::uint64_t);
    friend class PolyBuilder;
};

Poly poly_pow(const Poly& p, std::uint64_t e);

/// Parses the polynomial grammar:
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := rational | var ['^' int]
/// Errors carry a 1-based character position.
Poly parse_poly(const std::string& text, const RingPtr& ring);

/// Emits terms in graded-lex descending order, coefficient first, '*'
/// explicit, exponent omitted when 1. parse(format(p)) == p.
std::string format_poly(const Poly& p);

/// Canonical representative of the unit orbit of p.
/// laurent: support shifted so every variable has min exponent 0, then the
/// grlex leading coefficient is scaled to 1 (units are c * monomial).
/// polynomial: leading coefficient scaled to 1 (units are constants).
/// normalize(0) = 0; idempotent.
Poly normalize_up_to_unit(const Poly& p);

bool equal_up_to_unit(const Poly& p, const Poly& q);

/// Evaluates p with every ring variable assigned. Exact stays exact;
/// any float input promotes the result. A laurent variable occurring with
/// a negative exponent must not be assigned zero.
Scalar eval_poly(const Poly& p, const std::map<std::string, Scalar>& point);

/// Exact division: returns q with num == q * den, or throws compute_error
/// if den does not divide num (or den == 0).
Poly divide_exact(const Poly& num, const Poly& den);

} // namespace laf

#endif
