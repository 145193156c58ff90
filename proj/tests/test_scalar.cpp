#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hclat/laurent.hpp"
#include "hclat/rational.hpp"
#include "hclat/scalar.hpp"

using namespace hclat;

// valuation by repeated halving, for comparison
static long naive_ord2(long x) {
    long k = 0;
    while (x % 2 == 0) {
        x /= 2;
        ++k;
    }
    return k;
}

TEST_CASE("rationals are canonical") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(0, 7)) == "0");
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("3/6") == make_rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("\xE2\x88\x92" "2/3") == make_rational(-2, 3));  // unicode minus
    CHECK(parse_rational(" 4 / 8 ") == make_rational(1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("x"), DomainError);
    CHECK_THROWS_AS(parse_rational("1.5"), DomainError);
    for (long a = -20; a <= 20; ++a)
        for (long b = 1; b <= 12; ++b) {
            Rational x = make_rational(a, b);
            CHECK(parse_rational(to_string(x)) == x);
        }
}

TEST_CASE("2-adic valuation") {
    for (long x = 1; x <= 2000; ++x) {
        CHECK(ord2(Integer(x)) == naive_ord2(x));
        CHECK(ord2(Integer(-x)) == naive_ord2(x));
    }
    CHECK(ord2(make_rational(3, 8)) == -3);
    CHECK(ord2(make_rational(12, 5)) == 2);
    CHECK_THROWS_AS(ord2(Rational(0)), DomainError);
}

TEST_CASE("floor and fractional part") {
    CHECK(floor(make_rational(-1, 2)) == -1);
    CHECK(floor(make_rational(7, 3)) == 2);
    CHECK(frac_mod1(make_rational(-1, 3)) == make_rational(2, 3));
    CHECK(frac_mod1(Rational(5)) == 0);
}

TEST_CASE("integer conversions") {
    CHECK(is_integer(make_rational(4, 2)));
    CHECK_FALSE(is_integer(make_rational(1, 2)));
    CHECK(to_long(make_rational(-6, 3)) == -2);
    CHECK_THROWS_AS(to_long(make_rational(1, 3)), DomainError);
}

TEST_CASE("laurent arithmetic") {
    const Laurent z = Laurent::z();
    Laurent p = Laurent(1) + z;
    CHECK(to_string(p * p) == "1 + 2*z + z^2");
    CHECK((p - p).is_zero());
    CHECK((z * Laurent::z(-1)) == Laurent(1));
    CHECK(p.evaluate(Rational(2)) == 3);
    CHECK_THROWS_AS(Laurent::z(-1).evaluate(Rational(0)), DomainError);
    CHECK((Laurent(2) * z).div_monomial(Rational(2), 1) == Laurent(1));
    CHECK(Laurent::monomial(Rational(0), 5).is_zero());
}

TEST_CASE("laurent parse round trip") {
    for (const char* text : {"0", "1", "z", "-z^-2", "3/4*z", "1 + 2*z - 1/2*z^-1", "2z", "z^2 - z"}) {
        Laurent p = parse_laurent(text);
        CHECK(parse_laurent(to_string(p)) == p);
    }
    CHECK(parse_laurent("2z") == Laurent(2) * Laurent::z());
    CHECK(parse_laurent("1 + 2*z - 1/2*z^-1") ==
          Laurent(1) + Laurent(2) * Laurent::z() - Laurent::monomial(make_rational(1, 2), -1));
    CHECK_THROWS_AS(parse_laurent("z^"), DomainError);
    CHECK_THROWS_AS(parse_laurent("y + 1"), DomainError);
}

TEST_CASE("ring membership") {
    auto z4 = CoefficientRing::localized(4);
    CHECK(z4.contains(make_rational(3, 8)));
    CHECK_FALSE(z4.contains(make_rational(1, 3)));
    CHECK(CoefficientRing::integers().contains(Rational(-5)));
    CHECK_FALSE(CoefficientRing::integers().contains(make_rational(1, 2)));
    CHECK(CoefficientRing::poly().contains(Laurent(1) + Laurent::z()));
    CHECK_FALSE(CoefficientRing::poly().contains(Laurent::z(-1)));
    CHECK(CoefficientRing::laurent().contains(Laurent::z(-1)));
    CHECK(in_ring(Scalar::rational(make_rational(1, 6)), CoefficientRing::localized(6)));
    CHECK_FALSE(in_ring(Scalar::rational(make_rational(1, 6)), CoefficientRing::localized(2)));
}

TEST_CASE("laurent json") {
    Laurent p = parse_laurent("1/2*z^-1 + 3*z^2");
    CHECK(laurent_from_json(laurent_to_json(p)) == p);
    CHECK(laurent_to_json(p).dump() == R"([[-1,"1/2"],[2,"3"]])");
}
