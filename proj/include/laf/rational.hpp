#ifndef LAF_RATIONAL_HPP
#define LAF_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <gmpxx.h>

#include "laf/errors.hpp"

namespace laf {

/// Exact rational number. Always held in canonical form: reduced to lowest
/// terms, denominator > 0, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long num) : v_(num) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw input_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "123", "-7/4". Digits are arbitrary precision.
    static Rational from_string(const std::string& s) {
        auto bad = [&] { throw input_error("malformed rational '" + s + "'"); };
        if (s.empty()) bad();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                return Rational(mpq_class(mpz_class(s, 10)));
            }
            mpz_class num(s.substr(0, slash), 10);
            mpz_class den(s.substr(slash + 1), 10);
            if (den == 0) throw input_error("rational with zero denominator: '" + s + "'");
            if (den < 0) bad();  // grammar: denominator is unsigned
            mpq_class q(num, den);
            q.canonicalize();
            return Rational(std::move(q));
        } catch (const std::invalid_argument&) {
            bad();
        }
        return Rational();  // unreachable
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    const mpq_class& raw() const { return v_; }
    double to_double() const { return v_.get_d(); }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw compute_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw compute_error("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    /// p^e with e possibly negative (requires p != 0 then).
    Rational pow(std::int64_t e) const {
        if (e == 0) return Rational(1);
        bool neg = e < 0;
        std::uint64_t k = neg ? static_cast<std::uint64_t>(-(e + 1)) + 1
                              : static_cast<std::uint64_t>(e);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(k));
        mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(k));
        mpq_class r(num, den);
        r.canonicalize();
        Rational out(std::move(r));
        return neg ? out.inverse() : out;
    }

private:
    mpq_class v_;
};

} // namespace laf

#endif
