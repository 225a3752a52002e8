#include <doctest.h>

#include "mtpath/bivar_poly.hpp"
#include "mtpath/closedform.hpp"
#include "mtpath/paths.hpp"
#include "mtpath/substitute.hpp"

using namespace mtpath;

namespace {
const bivar_poly one(1);
const bivar_poly x = bivar_poly::var_x();
const bivar_poly y = bivar_poly::var_y();
} // namespace

TEST_CASE("ring arithmetic") {
    bivar_poly p = bivar_poly::from_terms({{2, 1, 3}, {0, 0, -5}});
    CHECK(p + bivar_poly() == p);
    CHECK((x + one) * (x - one) == bivar_poly::from_terms({{2, 0, 1}, {0, 0, -1}}));
    bivar_poly n242 = family_polynomial(family::N, 2, 4, 2);
    CHECK((n242 - n242).is_zero());
    CHECK(p - p == bivar_poly());
    CHECK((-p) + p == bivar_poly());
    CHECK(p * bivar_poly() == bivar_poly());
    CHECK(p.pow(0) == one);
    CHECK(p.pow(3) == p * p * p);
    CHECK_THROWS_AS(bivar_poly::monomial(-1, 0), std::invalid_argument);
}

TEST_CASE("no zero terms are stored") {
    bivar_poly p;
    p.add_term(1, 1, bigint(2));
    p.add_term(1, 1, bigint(-2));
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
}

TEST_CASE("canonical text rendering") {
    CHECK(bivar_poly().to_text() == "0");
    CHECK(bivar_poly(-3).to_text() == "-3");
    CHECK(bivar_poly::from_terms({{2, 2, 1}, {1, 1, 4}, {1, 0, 2}, {0, 0, 5}}).to_text() ==
          "x^2*y^2 + 4*x*y + 2*x + 5");
    CHECK(bivar_poly::from_terms({{1, 0, -1}, {0, 1, 1}}).to_text() == "-x + y");
    CHECK(bivar_poly::from_terms({{0, 3, 1}, {2, 0, 1}}).to_text() == "y^3 + x^2");
}

TEST_CASE("exact division") {
    bivar_poly prod = (x + one).pow(3) * (x - y).pow(2);
    auto q = prod.divided_by((x + one).pow(2));
    REQUIRE(q.has_value());
    CHECK(*q == (x + one) * (x - y).pow(2));
    CHECK_FALSE((x * x + one).divided_by(x + one).has_value());
    CHECK(bivar_poly().divided_by(x).has_value());
    CHECK_THROWS_AS((void)x.divided_by(bivar_poly()), std::domain_error);
    auto qi = bivar_poly::from_terms({{1, 0, 6}, {0, 0, -9}}).divided_by_integer(bigint(3));
    REQUIRE(qi.has_value());
    CHECK(*qi == bivar_poly::from_terms({{1, 0, 2}, {0, 0, -3}}));
    CHECK_FALSE(bivar_poly::from_terms({{1, 0, 5}}).divided_by_integer(bigint(3)).has_value());
}

TEST_CASE("substitute clears denominators exactly") {
    // x^2 * A_{2,3,1}((x+1)/x, (y+1)/(x+1))
    bivar_poly a231 = bivar_poly::from_terms({{2, 2, 1}, {1, 1, 4}, {1, 0, 2}, {0, 0, 5}});
    substitution_spec s;
    s.x_image = {x + one, x};
    s.y_image = {y + one, x + one};
    s.prefactor = bivar_poly::monomial(2, 0);
    CHECK(substitute(a231, s) ==
          bivar_poly::from_terms({{2, 0, 7}, {1, 1, 4}, {0, 2, 1}, {1, 0, 6}, {0, 1, 2}, {0, 0, 1}}));
}

TEST_CASE("identity substitution is the identity") {
    substitution_spec id;
    id.x_image = {x, one};
    id.y_image = {y, one};
    bivar_poly p = family_polynomial(family::A, 3, 4, 2);
    CHECK(substitute(p, id) == p);
}

TEST_CASE("surviving denominator raises non_polynomial_result") {
    substitution_spec s;
    s.x_image = {one, x};
    s.y_image = {y, one};
    CHECK_THROWS_AS(substitute(x + one, s), non_polynomial_result);
}

TEST_CASE("zero denominator in an image is rejected") {
    substitution_spec s;
    s.x_image = {x, bivar_poly()};
    s.y_image = {y, one};
    CHECK_THROWS_AS(substitute(x, s), std::invalid_argument);
}

TEST_CASE("reverse_x") {
    CHECK(reverse_x(bivar_poly(7), 0) == bivar_poly(7));
    bivar_poly p = bivar_poly::from_terms({{2, 1, 3}, {1, 0, -2}, {0, 2, 1}});
    CHECK(reverse_x(reverse_x(p, 4), 4) == p);
    CHECK_THROWS_AS(reverse_x(p, 1), std::invalid_argument);
    // reverse_x(N_{2,4,1}(x,1), 3) = B_{2,4,1}(x,1), oracle = brute force
    auto dyck = enumerate_dyck(2, 4, 1);
    bivar_poly n_val = brute_polynomial(dyck, stat_selector::valleys(), stat_selector::returns());
    bivar_poly b_val =
        brute_polynomial(dyck, stat_selector::residue_valleys(1), stat_selector::returns());
    CHECK(reverse_x(eval_y_one(n_val), 3) == eval_y_one(b_val));
}
