#include <doctest.h>

#include "ccent/rational.hpp"

using namespace ccent;

TEST_SUITE("rational") {

TEST_CASE("parses fractions, integers and decimals") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("0.8") == Rational(4, 5));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("2/6") == Rational(1, 3));
}

TEST_CASE("rejects junk") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
}

TEST_CASE("formats canonically") {
  CHECK(to_string(make_rational(4, 8)) == "1/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(make_rational(-3, 6) == parse_rational("-1/2"));
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

}  // TEST_SUITE
