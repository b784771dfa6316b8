#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "desir/error.hpp"
#include "desir/rational.hpp"

using desir::Rational;

TEST_CASE("parse produces canonical fractions") {
    CHECK(Rational::parse("6/4").to_string() == "3/2");
    CHECK(Rational::parse("-10/5").to_string() == "-2");
    CHECK(Rational::parse("0/7").to_string() == "0");
    CHECK(Rational::parse("-17/10") == Rational(-17, 10));
    CHECK(Rational::parse("-17/10").denominator() == 10);
}

TEST_CASE("parse rejects malformed text") {
    for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "a", "1/-2", "+1", "1 "}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), desir::InputError);
    }
}

TEST_CASE("arithmetic is exact") {
    const Rational a(1, 3);
    const Rational b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    Rational sum(0);
    for (int i = 0; i < 10; ++i) {
        sum += Rational(1, 10);
    }
    CHECK(sum == Rational(1));
}

TEST_CASE("ordering and predicates") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(-3, 4).sign() == -1);
    CHECK(Rational(0).is_zero());
    CHECK(Rational(4, 2).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
    std::ostringstream os;
    os << Rational(-7, 3);
    CHECK(os.str() == "-7/3");
}

TEST_CASE("big values do not overflow") {
    Rational x(1);
    for (int i = 0; i < 100; ++i) {
        x *= Rational(1'000'000'007);
    }
    for (int i = 0; i < 100; ++i) {
        x /= Rational(1'000'000'007);
    }
    CHECK(x == Rational(1));
}
