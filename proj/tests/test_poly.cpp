#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "laf/poly.hpp"
#include "testutil.hpp"

using namespace laf;
using laf::testutil::Rng;

namespace {
const RingPtr LX = laurent_ring({"x"});
const RingPtr PX = polynomial_ring({"x"});
const RingPtr PT = polynomial_ring({"t"});
const RingPtr LT = laurent_ring({"t"});
}

TEST_CASE("rational basics") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(-4, 6).str() == "-2/3");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational::from_string("12/8") == Rational(3, 2));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational::from_string("1/0"), input_error);
    CHECK_THROWS_AS(Rational::from_string("x"), input_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), compute_error);
}

TEST_CASE("parse: grammar examples") {
    Poly p = parse_poly("x^-1 + 2", LX);
    REQUIRE(p.terms().size() == 2);
    CHECK(p.terms().at({-1}) == Rational(1));
    CHECK(p.terms().at({0}) == Rational(2));

    CHECK(parse_poly("0", LX).is_zero());
    CHECK(parse_poly("3 - 3", LX).is_zero());
    CHECK(parse_poly("-x", LX) == -Poly::variable(LX, "x"));
    CHECK(parse_poly("2*x^3*x^-1", LX) == Poly::monomial(LX, {2}, Rational(2)));
    CHECK(parse_poly("1/2 * x", LX) == Poly::monomial(LX, {1}, Rational(1, 2)));
}

TEST_CASE("parse: errors carry positions") {
    CHECK_THROWS_WITH_AS(parse_poly("x^-1", PX),
                         doctest::Contains("negative exponent"), input_error);
    CHECK_THROWS_WITH_AS(parse_poly("x + y", LX),
                         doctest::Contains("unknown variable 'y'"), input_error);
    CHECK_THROWS_WITH_AS(parse_poly("x +", LX), doctest::Contains("position"), input_error);
    CHECK_THROWS_AS(parse_poly("", LX), input_error);
    CHECK_THROWS_AS(parse_poly("2x", LX), input_error);   // '*' is mandatory
    CHECK_THROWS_AS(parse_poly("1/0", LX), input_error);
    CHECK_THROWS_AS(parse_poly("x^999999999999999999999", LX), input_error);
}

TEST_CASE("arithmetic: stated examples") {
    auto x = Poly::variable(LX, "x");
    auto one = Poly::constant(LX, Rational(1));
    CHECK((x + one) * (x - one) == parse_poly("x^2 - 1", LX));
    auto p = parse_poly("2*x^3 - x + 5", LX);
    CHECK((p + (-p)).is_zero());
    CHECK(Poly::variable(LX, "x", -1) * x == one);
    CHECK_THROWS_AS(parse_poly("x", LX) + parse_poly("x", PX), input_error);
}

TEST_CASE("format: graded-lex descending, round trip") {
    CHECK(format_poly(parse_poly("1 + x^2 - x", LX)) == "x^2 - x + 1");
    CHECK(format_poly(Poly(LX)) == "0");
    CHECK(format_poly(parse_poly("x^-1 + 2", LX)) == "2 + x^-1");
    auto r2 = laurent_ring({"x", "y"});
    CHECK(format_poly(parse_poly("y*x + 3*x^2 - 1/2*y^-1", r2)) ==
          "3*x^2 + x*y - 1/2*y^-1");
}

TEST_CASE("normalize_up_to_unit: stated examples") {
    CHECK(normalize_up_to_unit(parse_poly("4*t", LT)) == Poly::constant(LT, Rational(1)));
    CHECK(normalize_up_to_unit(parse_poly("4*t", PT)) == Poly::variable(PT, "t"));
    CHECK(normalize_up_to_unit(Poly(LT)).is_zero());

    // (1 - x^-4)^2 and x^-8 (x^4 - 1)^2 expand to the same canonical form
    auto a = poly_pow(parse_poly("1 - x^-4", LX), 2);
    auto b = Poly::variable(LX, "x", -8) * poly_pow(parse_poly("x^4 - 1", LX), 2);
    CHECK(normalize_up_to_unit(a) == normalize_up_to_unit(b));
    CHECK(a == b);  // here they are even equal on the nose
}

TEST_CASE("equal_up_to_unit: stated examples") {
    CHECK(equal_up_to_unit(parse_poly("4*t", PT), parse_poly("t", PT)));
    CHECK(equal_up_to_unit(parse_poly("4*t", LT), parse_poly("1", LT)));
    CHECK_FALSE(equal_up_to_unit(parse_poly("t", PT), parse_poly("t^2", PT)));
}

TEST_CASE("eval: stated examples") {
    std::map<std::string, Scalar> at2{{"x", Scalar::exact(Rational(2))}};
    CHECK(eval_poly(parse_poly("x^2 - 1", LX), at2).rational() == Rational(3));

    std::map<std::string, Scalar> athalf{{"x", Scalar::exact(Rational(1, 2))}};
    CHECK(eval_poly(Poly::variable(LX, "x", -1), athalf).rational() == Rational(2));

    std::map<std::string, Scalar> at0{{"x", Scalar::exact(Rational(0))}};
    CHECK_THROWS_AS(eval_poly(Poly::variable(LX, "x", -1), at0), input_error);
    CHECK_THROWS_AS(eval_poly(parse_poly("x", LX), {}), input_error);
}

TEST_CASE("property: ring laws on random polys") {
    Rng rng(20260808);
    auto ring = laurent_ring({"a", "b", "c", "d"});
    for (int i = 0; i < 1000; ++i) {
        Poly p = testutil::rand_poly(rng, ring, 3);
        Poly q = testutil::rand_poly(rng, ring, 3);
        Poly r = testutil::rand_poly(rng, ring, 3);
        REQUIRE(p + q == q + p);
        REQUIRE(p * q == q * p);
        REQUIRE((p + q) + r == p + (q + r));
        REQUIRE((p * q) * r == p * (q * r));
        REQUIRE(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("property: parse . format is the identity") {
    Rng rng(7);
    auto ring = laurent_ring({"x", "y", "z"});
    auto pring = polynomial_ring({"x", "y", "z"});
    for (int i = 0; i < 400; ++i) {
        Poly p = testutil::rand_poly(rng, ring, 5);
        REQUIRE(parse_poly(format_poly(p), ring) == p);
        Poly q = testutil::rand_poly(rng, pring, 5, 0, 5);
        REQUIRE(parse_poly(format_poly(q), pring) == q);
    }
}

TEST_CASE("property: normalize is idempotent and constant on unit orbits") {
    Rng rng(99);
    for (auto ring : {laurent_ring({"x", "y"}), polynomial_ring({"x", "y"})}) {
        for (int i = 0; i < 300; ++i) {
            Poly p = testutil::rand_poly(rng, ring, 4);
            Poly n = normalize_up_to_unit(p);
            REQUIRE(normalize_up_to_unit(n) == n);
            Poly u = testutil::rand_unit(rng, ring);
            REQUIRE(normalize_up_to_unit(u * p) == n);
            if (!p.is_zero()) {
                auto [e, c] = n.leading_term();
                REQUIRE(c.is_one());
            }
        }
    }
}

TEST_CASE("property: eval is a ring homomorphism") {
    Rng rng(424242);
    auto ring = laurent_ring({"x", "y"});
    for (int i = 0; i < 200; ++i) {
        Poly p = testutil::rand_poly(rng, ring, 3);
        Poly q = testutil::rand_poly(rng, ring, 3);
        std::map<std::string, Scalar> pt{
            {"x", Scalar::exact(testutil::rand_nonzero_rational(rng))},
            {"y", Scalar::exact(testutil::rand_nonzero_rational(rng))}};
        auto lhs = eval_poly(p * q, pt).rational();
        auto rhs = (eval_poly(p, pt) * eval_poly(q, pt)).rational();
        REQUIRE(lhs == rhs);
        REQUIRE(eval_poly(p + q, pt).rational() ==
                (eval_poly(p, pt) + eval_poly(q, pt)).rational());
    }
    // float mode: relative error <= 1e-12
    for (int i = 0; i < 200; ++i) {
        Poly p = testutil::rand_poly(rng, ring, 3, -3, 3);
        Poly q = testutil::rand_poly(rng, ring, 3, -3, 3);
        std::uniform_real_distribution<double> d(0.5, 2.0);
        std::map<std::string, Scalar> pt{{"x", Scalar::floating(d(rng), d(rng))},
                                         {"y", Scalar::floating(d(rng), d(rng))}};
        auto lhs = eval_poly(p * q, pt).to_complex();
        auto rhs = eval_poly(p, pt).to_complex() * eval_poly(q, pt).to_complex();
        REQUIRE(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("divide_exact") {
    auto ring = laurent_ring({"x", "y"});
    Rng rng(123);
    for (int i = 0; i < 200; ++i) {
        Poly p = testutil::rand_poly(rng, ring, 3);
        Poly q = testutil::rand_nonzero_poly(rng, ring, 3);
        REQUIRE(divide_exact(p * q, q) == p);
    }
    auto pring = polynomial_ring({"x", "y"});
    for (int i = 0; i < 200; ++i) {
        Poly p = testutil::rand_poly(rng, pring, 3, 0, 4);
        Poly q = testutil::rand_nonzero_poly(rng, pring, 3, 0, 4);
        REQUIRE(divide_exact(p * q, q) == p);
    }
    CHECK_THROWS_AS(divide_exact(parse_poly("x^2 + 1", pring), parse_poly("x + 1", pring)),
                    compute_error);
    CHECK_THROWS_AS(divide_exact(parse_poly("1", ring), parse_poly("1 - x^-1", ring)),
                    compute_error);
    CHECK_THROWS_AS(divide_exact(parse_poly("x", ring), Poly(ring)), compute_error);
    // geometric-sum style quotient in a laurent ring
    CHECK(divide_exact(parse_poly("x - x^-1", LX), parse_poly("1 - x^-1", LX)) ==
          parse_poly("x + 1", LX));
}

TEST_CASE("exponent overflow is a reported error, not wraparound") {
    auto big = Poly::monomial(LX, {static_cast<std::int64_t>(1) << 62}, Rational(1));
    CHECK_THROWS_WITH_AS(big * big, doctest::Contains("overflow"), input_error);
}

TEST_CASE("ring descriptor validation") {
    CHECK_THROWS_WITH_AS(laurent_ring({"x", "x"}), doctest::Contains("duplicate"),
                         input_error);
    CHECK_THROWS_AS(laurent_ring({""}), input_error);
    CHECK_THROWS_AS(laurent_ring({}), input_error);
    CHECK_THROWS_AS(Poly::variable(LX, "nope"), input_error);
}

TEST_CASE("scalar text forms") {
    CHECK(Scalar::parse_exact("-7/3").rational() == Rational(-7, 3));
    auto z = Scalar::parse_float("1.5-0.25i").to_complex();
    CHECK(z == std::complex<double>(1.5, -0.25));
    CHECK(Scalar::parse_float("2e-3").to_complex() == std::complex<double>(2e-3, 0));
    CHECK(Scalar::parse_float("0.5i").to_complex() == std::complex<double>(0, 0.5));
    CHECK_THROWS_AS(Scalar::parse_float("abc"), input_error);
    // round trip through str()
    for (auto s : {Scalar::floating(1.25, -3.5), Scalar::floating(-0.125, 0.0),
                   Scalar::exact(Rational(22, 7))}) {
        auto back = s.is_exact() ? Scalar::parse_exact(s.str()) : Scalar::parse_float(s.str());
        CHECK(back.to_complex() == s.to_complex());
    }
    // promotion
    CHECK_FALSE((Scalar::exact(Rational(1)) + Scalar::floating(1.0)).is_exact());
    CHECK((Scalar::exact(Rational(1)) + Scalar::exact(Rational(1))).is_exact());
}
