#include <doctest.h>

#include "trigrid/rational.hpp"

using trigrid::Rational;

TEST_SUITE("rational") {

TEST_CASE("stored reduced with positive denominator") {
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(1, -2).to_string() == "-1/2");
    CHECK(Rational(-6, -4).to_string() == "3/2");
    CHECK(Rational(0, 7).to_string() == "0/1");
    CHECK(Rational(5).to_string() == "5/1");
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(13, 12) > Rational(1));
    CHECK(Rational(2, 3).is_positive());
    CHECK_FALSE(Rational(0).is_positive());
    CHECK_FALSE(Rational(-1, 5).is_positive());
}

TEST_CASE("parse round trip") {
    for (const char* text : {"2/3", "-7/5", "0/1", "13/12", "123456789123456789/987654321"}) {
        CHECK(Rational::parse(text).to_string() == Rational::parse(text).to_string());
        CHECK(Rational::parse(Rational::parse(text).to_string()) == Rational::parse(text));
    }
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK(Rational::parse("9") == Rational(9));
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3/"), std::invalid_argument);
}

TEST_CASE("double conversion") {
    CHECK(Rational(2, 3).to_double() == doctest::Approx(0.6666666666666666));
    CHECK(Rational(-13, 12).to_double() == doctest::Approx(-1.0833333333333333));
}

}  // TEST_SUITE
