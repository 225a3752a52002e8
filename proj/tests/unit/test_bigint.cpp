#include <doctest.h>

#include "mtpath/bigint.hpp"
#include "mtpath/rational.hpp"

using namespace mtpath;

TEST_CASE("bigint construction and rendering") {
    CHECK(bigint().is_zero());
    CHECK(bigint(0).to_string() == "0");
    CHECK(bigint(-7).to_string() == "-7");
    CHECK(bigint(1234567890123456789LL).to_string() == "1234567890123456789");
    CHECK(bigint::from_decimal("-000123").to_string() == "-123");
    CHECK(bigint::from_decimal("999999999999999999999999999999").to_string() ==
          "999999999999999999999999999999");
    CHECK_THROWS_AS(bigint::from_decimal("12a"), std::invalid_argument);
    CHECK_THROWS_AS(bigint::from_decimal(""), std::invalid_argument);
}

TEST_CASE("bigint arithmetic") {
    bigint a = bigint::from_decimal("123456789012345678901234567890");
    bigint b = bigint::from_decimal("-98765432109876543210");
    CHECK((a + b).to_string() == "123456788913580246791358024680");
    CHECK((a * b).to_string() == "-12193263113702179522496570642237463801111263526900");
    CHECK(a - a == bigint(0));
    CHECK(-(-a) == a);
    CHECK(bigint(-5) < bigint(3));
    CHECK(bigint(3) < bigint(5));
    CHECK(bigint::pow(bigint(2), 100).to_string() == "1267650600228229401496703205376");
}

TEST_CASE("bigint division is truncated with remainder matching") {
    bigint a = bigint::from_decimal("123456789012345678901234567890");
    bigint b = bigint::from_decimal("-98765432109876543210");
    bigint q, r;
    bigint::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(q.to_string() == "-1249999988");
    CHECK(r.to_string() == "60185185207253086410");
    CHECK(bigint(7) / bigint(2) == bigint(3));
    CHECK(bigint(-7) / bigint(2) == bigint(-3));
    CHECK(bigint(-7) % bigint(2) == bigint(-1));
    CHECK_THROWS_AS(bigint(1) / bigint(0), std::domain_error);
    // larger random-ish pairs round-trip
    bigint big = bigint::pow(bigint(31), 40), div = bigint::pow(bigint(7), 17);
    bigint::divmod(big, div, q, r);
    CHECK(q * div + r == big);
    CHECK(r < div);
}

TEST_CASE("bigint gcd and conversions") {
    CHECK(bigint::gcd(bigint(48), bigint(-18)) == bigint(6));
    CHECK(bigint::gcd(bigint(0), bigint(5)) == bigint(5));
    CHECK(bigint(42).to_long_long() == 42);
    CHECK(bigint(-42).to_long_long() == -42);
    CHECK_THROWS_AS(bigint::pow(bigint(10), 30).to_long_long(), std::overflow_error);
}

TEST_CASE("rational reduces and detects integers") {
    rational r(bigint(6), bigint(-4));
    CHECK(r.numerator() == bigint(-3));
    CHECK(r.denominator() == bigint(2));
    CHECK((r * rational(bigint(2), bigint(3))).to_string() == "-1");
    CHECK(rational(bigint(10), bigint(5)).is_integer());
    CHECK(rational(bigint(10), bigint(5)).to_integer() == bigint(2));
    CHECK_THROWS_AS(rational(bigint(1), bigint(2)).to_integer(), integrality_violation);
    CHECK_THROWS_AS(rational(bigint(1), bigint(0)), std::domain_error);
    CHECK((rational(1) / rational(bigint(3))).to_string() == "1/3");
    CHECK((rational(bigint(1), bigint(3)) + rational(bigint(2), bigint(3))).is_integer());
}
