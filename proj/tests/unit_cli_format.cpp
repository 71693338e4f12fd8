#include "doctest.h"

#include <cmath>

#include "qtmom/bigfloat.hpp"

using namespace qtmom;

TEST_CASE("decimal renderings") {
    CHECK(decimal_string(Rational(11, 15), 10).substr(0, 5) == "7.333");
    CHECK(decimal_string(Rational(0)) == "0");
    CHECK(decimal_string(Rational(-1, 2), 5).substr(0, 2) == "-5");

    // renderings carry 30+ significant digits
    std::string s = decimal_string(Rational(1, 3), 30);
    CHECK(s.find("3333333333333333333333333333") != std::string::npos);

    // round trip: parse of "p/q" equals the original value
    Rational r(-77, 6);
    CHECK(Rational::from_string(r.to_string()) == r);
}

TEST_CASE("bigfloat arithmetic") {
    BigFloat two(2L);
    BigFloat e = BigFloat::exp(BigFloat(1L));
    CHECK(e.to_double() == doctest::Approx(2.718281828459045));
    CHECK((two * two).to_double() == doctest::Approx(4.0));
    CHECK(BigFloat::lngamma(BigFloat(5L)).to_double() ==
          doctest::Approx(std::log(24.0)));
    CHECK(BigFloat(Rational(1, 4)).to_string(10).substr(0, 4) == "2.50");
}
