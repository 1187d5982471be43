#include "fdx/rational.hpp"

#include "fdx/error.hpp"

#include <doctest.h>

using namespace fdx;

TEST_CASE("parse_rational accepts integers and fractions") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK(parse_rational("+7") == Rational(7));
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational(" 10 / 4 ") == Rational(5, 2));
    CHECK(parse_rational("123456789012345678901234567890") ==
          Rational(BigInt("123456789012345678901234567890")));
}

TEST_CASE("parse_rational keeps values in lowest terms with positive denominator") {
    Rational v = parse_rational("-6/4");
    CHECK(numerator(v) == -3);
    CHECK(denominator(v) == 2);
}

TEST_CASE("parse_rational rejects non-rational text") {
    for (const char* bad : {"", "1.5", "x", "3/0", "1/-2", "2/2/2", "--3"}) {
        CHECK_THROWS_AS(parse_rational(bad), Error);
        try {
            parse_rational(bad);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::non_rational);
        }
    }
}

TEST_CASE("format_rational round-trips") {
    for (const char* text : {"0", "-5", "3/4", "-122/7"}) {
        Rational v = parse_rational(text);
        CHECK(parse_rational(format_rational(v)) == v);
    }
    CHECK(format_rational(Rational(1, 2)) == "1/2");
    CHECK(format_rational(Rational(4)) == "4");
}
