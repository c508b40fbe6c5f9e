#include "laf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace laf {

bool grlex_less(const Exponents& a, const Exponents& b) {
    __int128 sa = 0, sb = 0;
    for (auto x : a) sa += x;
    for (auto x : b) sb += x;
    if (sa != sb) return sa < sb;
    return a < b;
}

Poly Poly::constant(RingPtr ring, Rational c) {
    Poly p(ring);
    if (!c.is_zero()) p.terms_.emplace(Exponents(ring->arity(), 0), std::move(c));
    return p;
}

Poly Poly::monomial(RingPtr ring, Exponents e, Rational c) {
    Poly p(ring);
    if (e.size() != ring->arity()) throw input_error("monomial exponent arity mismatch");
    p.check_exponents(e);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

Poly Poly::variable(RingPtr ring, const std::string& name, std::int64_t exp) {
    auto idx = ring->index_of(name);
    if (idx == static_cast<std::size_t>(-1))
        throw input_error("unknown variable '" + name + "'");
    Exponents e(ring->arity(), 0);
    e[idx] = exp;
    return monomial(std::move(ring), std::move(e), Rational(1));
}

Rational Poly::constant_value() const {
    if (is_zero()) return Rational(0);
    if (!is_constant()) throw compute_error("Poly is not constant");
    return terms_.begin()->second;
}

std::pair<Exponents, Rational> Poly::leading_term() const {
    if (is_zero()) throw compute_error("leading term of zero Poly");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (grlex_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

std::int64_t Poly::min_exponent(std::size_t var) const {
    if (is_zero()) return 0;
    std::int64_t m = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
    return m;
}

void Poly::check_exponents(const Exponents& e) const {
    if (ring_->kind == RingKind::polynomial)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0)
                throw input_error("negative exponent of '" + ring_->vars[i] +
                                  "' in polynomial ring");
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    check_exponents(e);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_ring(a.ring(), b.ring(), "poly_add");
    Poly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_ring(a.ring(), b.ring(), "poly_sub");
    Poly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
}

Poly Poly::operator-() const {
    Poly out(ring_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly operator*(const Rational& c, const Poly& p) {
    Poly out(p.ring());
    if (c.is_zero()) return out;
    for (const auto& [e, pc] : p.terms_) out.terms_.emplace(e, c * pc);
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_ring(a.ring(), b.ring(), "poly_mul");
    Poly out(a.ring());
    Exponents e(a.ring()->arity());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                if (__builtin_add_overflow(ea[i], eb[i], &e[i]))
                    throw input_error("exponent overflow in poly_mul");
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly poly_pow(const Poly& p, std::uint64_t e) {
    Poly acc = Poly::constant(p.ring(), Rational(1));
    Poly base = p;
    while (e) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Parser {
    const std::string& text;
    const RingPtr& ring;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw input_error("syntax error at position " + std::to_string(at + 1) + ": " + msg);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool take(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }

    std::string digits() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits", start);
        return text.substr(start, pos - start);
    }

    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos;
        bool neg = take('-');
        skip_ws();
        std::string d = digits();
        try {
            std::int64_t v = std::stoll(d);
            return neg ? -v : v;
        } catch (const std::out_of_range&) {
            fail("exponent overflows 64 bits", start);
        }
    }

    Rational rational() {
        skip_ws();
        bool neg = take('-');
        skip_ws();
        std::string num = digits();
        std::string den;
        if (take('/')) {
            skip_ws();
            std::size_t dpos = pos;
            den = digits();
            if (mpz_class(den, 10) == 0) fail("zero denominator", dpos);
        }
        Rational r = den.empty() ? Rational::from_string(num)
                                 : Rational::from_string(num + "/" + den);
        return neg ? -r : r;
    }

    std::string identifier() {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    Poly factor() {
        char c = peek();
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(ring, rational());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t vstart = pos;
            std::string name = identifier();
            if (ring->index_of(name) == static_cast<std::size_t>(-1))
                fail("unknown variable '" + name + "'", vstart);
            std::int64_t e = 1;
            std::size_t epos = pos;
            if (take('^')) {
                epos = pos;
                e = integer();
            }
            if (e < 0 && ring->kind == RingKind::polynomial)
                fail("negative exponent of '" + name + "' in polynomial ring", epos);
            return Poly::variable(ring, name, e);
        }
        fail("expected rational or variable", pos);
    }

    Poly term() {
        Poly p = factor();
        while (take('*')) p = p * factor();
        return p;
    }

    Poly expr() {
        bool neg = take('-');
        Poly p = term();
        if (neg) p = -p;
        for (;;) {
            char c = peek();
            if (c == '+') { ++pos; p = p + term(); }
            else if (c == '-') { ++pos; p = p - term(); }
            else break;
        }
        return p;
    }

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos != text.size()) fail("trailing input", pos);
        return p;
    }
};

} // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
    Parser p{text, ring};
    return p.run();
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    // grlex descending
    std::vector<const std::pair<const Exponents, Rational>*> ts;
    for (const auto& t : p.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [](auto* a, auto* b) { return grlex_less(b->first, a->first); });

    std::ostringstream out;
    bool first = true;
    for (auto* t : ts) {
        const auto& [e, c] = *t;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { out << "-"; a = -a; }
            first = false;
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        bool any_var = false;
        for (auto x : e)
            if (x != 0) { any_var = true; break; }
        bool coeff_emitted = false;
        if (!any_var || !a.is_one()) {
            out << a.str();
            coeff_emitted = true;
        }
        const auto& vars = p.ring()->vars;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (coeff_emitted) out << "*";
            coeff_emitted = true;
            out << vars[i];
            if (e[i] != 1) out << "^" << e[i];
        }
    }
    return out.str();
}

Poly normalize_up_to_unit(const Poly& p) {
    if (p.is_zero()) return p;
    Poly shifted = p;
    if (p.ring()->kind == RingKind::laurent) {
        Exponents shift(p.ring()->arity());
        bool need = false;
        for (std::size_t v = 0; v < shift.size(); ++v) {
            shift[v] = -p.min_exponent(v);
            if (shift[v] != 0) need = true;
        }
        if (need) {
            shifted = p.map_exponents([&](const Exponents& e) {
                Exponents r(e);
                for (std::size_t v = 0; v < r.size(); ++v) {
                    if (__builtin_add_overflow(r[v], shift[v], &r[v]))
                        throw input_error("exponent overflow in normalize");
                }
                return r;
            });
        }
    }
    Rational lc = shifted.leading_term().second;
    if (lc.is_one()) return shifted;
    return lc.inverse() * shifted;
}

bool equal_up_to_unit(const Poly& p, const Poly& q) {
    require_same_ring(p.ring(), q.ring(), "equal_up_to_unit");
    return normalize_up_to_unit(p) == normalize_up_to_unit(q);
}

Scalar eval_poly(const Poly& p, const std::map<std::string, Scalar>& point) {
    const auto& vars = p.ring()->vars;
    std::vector<const Scalar*> vals(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = point.find(vars[i]);
        if (it == point.end())
            throw input_error("missing assignment for variable '" + vars[i] + "'");
        vals[i] = &it->second;
    }
    bool all_exact = true;
    for (auto* v : vals) all_exact = all_exact && v->is_exact();

    Scalar acc = all_exact ? Scalar::exact(Rational(0)) : Scalar::floating(0.0);
    for (const auto& [e, c] : p.terms()) {
        Scalar t = all_exact ? Scalar::exact(c) : Scalar::floating(c.to_double());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0 && vals[i]->is_zero())
                throw input_error("variable '" + vars[i] +
                                  "' is zero but occurs with a negative exponent");
            t = t * vals[i]->pow(e[i]);
        }
        acc = acc + t;
    }
    return acc;
}

namespace {

Poly shift_support(const Poly& p, const Exponents& shift) {
    return p.map_exponents([&](const Exponents& e) {
        Exponents r(e);
        for (std::size_t v = 0; v < r.size(); ++v)
            if (__builtin_add_overflow(r[v], shift[v], &r[v]))
                throw input_error("exponent overflow in shift");
        return r;
    });
}

} // namespace

Poly divide_exact(const Poly& num, const Poly& den) {
    require_same_ring(num.ring(), den.ring(), "divide_exact");
    if (den.is_zero()) throw compute_error("exact division by zero Poly");
    if (num.is_zero()) return num;

    // Shift laurent supports to be nonnegative first: grlex descent on
    // nonnegative supports is well founded, and exact quotients keep
    // nonnegative support after the shift (a domain argument per variable).
    std::size_t arity = num.ring()->arity();
    Exponents shift_n(arity, 0), shift_d(arity, 0);
    if (num.ring()->kind == RingKind::laurent) {
        for (std::size_t v = 0; v < arity; ++v) {
            shift_n[v] = -num.min_exponent(v);
            shift_d[v] = -den.min_exponent(v);
        }
    }
    Poly r = shift_support(num, shift_n);
    Poly d = shift_support(den, shift_d);

    Poly q(num.ring());
    auto [de, dc] = d.leading_term();
    while (!r.is_zero()) {
        auto [re, rc] = r.leading_term();
        Exponents e(arity);
        for (std::size_t i = 0; i < arity; ++i) {
            e[i] = re[i] - de[i];
            if (e[i] < 0) throw compute_error("polynomial division is not exact");
        }
        Poly t = Poly::monomial(num.ring(), std::move(e), rc / dc);
        q = q + t;
        r = r - t * d;
        if (!r.is_zero() && !grlex_less(r.leading_term().first, re))
            throw compute_error("polynomial division is not exact");
    }
    Exponents back(arity, 0);
    for (std::size_t v = 0; v < arity; ++v) back[v] = shift_d[v] - shift_n[v];
    return shift_support(q, back);
}

// ---------------------------------------------------------------------------
// Scalar text forms (kept next to the Poly grammar, which they extend)

std::string Scalar::str() const {
    if (is_exact()) return rational().str();
    auto z = to_complex();
    std::ostringstream out;
    out.precision(17);
    if (z.imag() == 0.0) {
        out << z.real();
    } else {
        out << z.real() << (z.imag() < 0 ? "-" : "+");
        out << std::fabs(z.imag()) << "i";
    }
    return out.str();
}

Scalar Scalar::parse_float(const std::string& s) {
    auto bad = [&] { throw input_error("malformed float scalar '" + s + "'"); };
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    auto number = [&]() -> double {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        std::size_t digits_start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
            ++pos;
        if (pos == digits_start) bad();
        if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
            ++pos;
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
            std::size_t e_start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == e_start) bad();
        }
        return std::stod(s.substr(start, pos - start));
    };

    double a = number();
    skip_ws();
    if (pos < s.size() && s[pos] == 'i') {  // pure imaginary "bi"
        ++pos;
        skip_ws();
        if (pos != s.size()) bad();
        return Scalar::floating(0.0, a);
    }
    if (pos == s.size()) return Scalar::floating(a, 0.0);
    if (s[pos] != '+' && s[pos] != '-') bad();
    double b = number();
    skip_ws();
    if (pos >= s.size() || s[pos] != 'i') bad();
    ++pos;
    skip_ws();
    if (pos != s.size()) bad();
    return Scalar::floating(a, b);
}

} // namespace laf
