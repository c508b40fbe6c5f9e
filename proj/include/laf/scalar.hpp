#ifndef LAF_SCALAR_HPP
#define LAF_SCALAR_HPP

#include <cmath>
#include <complex>
#include <string>
#include <variant>

#include "laf/rational.hpp"

namespace laf {

/// A value a character can take: exact rational or complex float.
/// Arithmetic never silently mixes modes; combining exact with float
/// promotes the result to float.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    explicit Scalar(Rational r) : v_(std::move(r)) {}
    explicit Scalar(std::complex<double> z) : v_(z) {}
    static Scalar exact(Rational r) { return Scalar(std::move(r)); }
    static Scalar floating(std::complex<double> z) { return Scalar(z); }
    static Scalar floating(double re, double im = 0.0) { return Scalar(std::complex<double>(re, im)); }

    bool is_exact() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const { return std::get<Rational>(v_); }
    std::complex<double> to_complex() const {
        if (is_exact()) return {rational().to_double(), 0.0};
        return std::get<std::complex<double>>(v_);
    }

    /// Exact zero test (for the float branch this is a bit-exact 0+0i test;
    /// tolerance-based decisions belong to the caller).
    bool is_zero() const {
        if (is_exact()) return rational().is_zero();
        auto z = std::get<std::complex<double>>(v_);
        return z.real() == 0.0 && z.imag() == 0.0;
    }

    double abs() const {
        if (is_exact()) return std::fabs(rational().to_double());
        return std::abs(std::get<std::complex<double>>(v_));
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return Scalar(a.rational() + b.rational());
        return Scalar(a.to_complex() + b.to_complex());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return Scalar(a.rational() - b.rational());
        return Scalar(a.to_complex() - b.to_complex());
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return Scalar(a.rational() * b.rational());
        return Scalar(a.to_complex() * b.to_complex());
    }
    Scalar operator-() const {
        if (is_exact()) return Scalar(-rational());
        return Scalar(-std::get<std::complex<double>>(v_));
    }

    Scalar inverse() const {
        if (is_exact()) return Scalar(rational().inverse());
        auto z = std::get<std::complex<double>>(v_);
        if (z.real() == 0.0 && z.imag() == 0.0) throw compute_error("inverse of zero scalar");
        return Scalar(1.0 / z);
    }

    Scalar pow(std::int64_t e) const {
        if (is_exact()) return Scalar(rational().pow(e));
        auto z = std::get<std::complex<double>>(v_);
        if (e == 0) return Scalar(std::complex<double>(1.0, 0.0));
        if (z.real() == 0.0 && z.imag() == 0.0 && e < 0)
            throw compute_error("negative power of zero scalar");
        std::complex<double> acc(1.0, 0.0), base = e < 0 ? 1.0 / z : z;
        std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                                : static_cast<std::uint64_t>(e);
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return Scalar(acc);
    }

    /// "3/2" for exact values, "a+bi" decimal form for float values.
    std::string str() const;

    /// Parses the exact form (rational grammar).
    static Scalar parse_exact(const std::string& s) { return Scalar(Rational::from_string(s)); }

    /// Parses the float form: "1.5", "-2e-3", "0.5i", "1+2i", "3-0.25i".
    static Scalar parse_float(const std::string& s);

private:
    std::variant<Rational, std::complex<double>> v_;
};

} // namespace laf

#endif
