#include <doctest.h>

#include "mtpath/closedform.hpp"
#include "mtpath/paths.hpp"

using namespace mtpath;

TEST_CASE("generalized binomials") {
    CHECK(binomial(-3, 3) == bigint(-10));
    CHECK(binomial(5, 2) == bigint(10));
    CHECK(binomial(4, -1) == bigint(0));
    CHECK(binomial(0, 0) == bigint(1));
    CHECK(binomial(-1, 0) == bigint(1));
    CHECK(binomial(3, 5) == bigint(0));
    CHECK(binomial(-2, 1) == bigint(-2));
    CHECK(binomial(60, 30).to_string() == "118264581564861424");
}

TEST_CASE("named coefficients from the worked example") {
    CHECK(family_coefficient(family::N, 2, 4, 2, 2, 1) == bigint(4));
    CHECK(family_coefficient(family::A, 2, 4, 2, 1, 1) == bigint(5));
    CHECK(family_coefficient(family::B, 2, 4, 2, 0, 2) == bigint(1));
    CHECK(family_coefficient(family::Sm, 2, 4, 2, 1, 1) == bigint(8));
    CHECK_THROWS_AS(family_coefficient(family::N, 0, 4, 2, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(family_coefficient(family::N, 2, 4, 5, 0, 0), std::invalid_argument);
}

TEST_CASE("family polynomials against pinned small cases") {
    CHECK(family_polynomial(family::N, 2, 4, 2) ==
          bivar_poly::from_terms({{2, 2, 1}, {2, 1, 4}, {2, 0, 9}, {1, 1, 2}, {1, 0, 8}, {0, 0, 1}}));
    CHECK(family_polynomial(family::A, 2, 4, 2) ==
          bivar_poly::from_terms({{2, 2, 1}, {2, 1, 1}, {2, 0, 1}, {1, 1, 5}, {1, 0, 8}, {0, 0, 9}}));
    CHECK(family_polynomial(family::B, 2, 4, 2) ==
          bivar_poly::from_terms({{2, 0, 3}, {1, 1, 3}, {0, 2, 1}, {1, 0, 10}, {0, 1, 3}, {0, 0, 5}}));
    CHECK(family_polynomial(family::A, 2, 3, 1) ==
          bivar_poly::from_terms({{2, 2, 1}, {1, 1, 4}, {1, 0, 2}, {0, 0, 5}}));
    CHECK(family_polynomial(family::Sm, 2, 4, 2) ==
          bivar_poly::from_terms({{2, 2, 1}, {2, 1, 1}, {2, 0, 1}, {1, 1, 8}, {1, 0, 11}, {0, 0, 25}}));
    CHECK(family_polynomial(family::Pm, 2, 4, 2) ==
          bivar_poly::from_terms({{2, 2, 1}, {2, 1, 1}, {2, 0, 1}, {1, 1, 6}, {1, 0, 10}, {0, 0, 18}}));
    CHECK(family_polynomial(family::N, 3, 5, 5) == bivar_poly(1));
    CHECK(family_polynomial(family::N, 2, 4, 4) == bivar_poly(1));
}

TEST_CASE("specialization polynomials and numbers") {
    CHECK(fuss_catalan(2, 3) == bigint(12));
    CHECK(bigint(static_cast<long long>(enumerate_dyck(2, 3, 1).size())) == fuss_catalan(2, 3));
    CHECK(eval_y_zero(family_polynomial(family::N, 2, 4, 2)) ==
          bivar_poly::from_terms({{2, 0, 9}, {1, 0, 8}, {0, 0, 1}}));
    CHECK(eval_y_one(family_polynomial(family::N, 2, 4, 2)) ==
          bivar_poly::from_terms({{2, 0, 14}, {1, 0, 10}, {0, 0, 1}}));
    CHECK(eval_y_one(family_polynomial(family::A, 2, 4, 2)) ==
          bivar_poly::from_terms({{2, 0, 3}, {1, 0, 13}, {0, 0, 9}}));
    CHECK(eval_y_zero(family_polynomial(family::A, 2, 4, 2)) ==
          bivar_poly::from_terms({{2, 0, 1}, {1, 0, 8}, {0, 0, 9}}));
    CHECK(narayana_number(1, 2, 0) == bigint(1));
    CHECK(narayana_number(1, 2, 1) == bigint(1));
    // Nar+(1,2,0) is 0: the dilation-1 simplex has its single point on a wall
    CHECK(narayana_number_positive(1, 2, 0) == bigint(0));
    CHECK(narayana_number_positive(1, 2, 1) == bigint(1));
    CHECK(rank_generating_poly(2, 4, 2) ==
          bivar_poly::from_terms({{2, 0, 3}, {1, 0, 13}, {0, 0, 9}}));
}

TEST_CASE("specializations agree with the full families at t=1") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 6; ++n) {
            bivar_poly np = family_polynomial(family::N, m, n, 1);
            bivar_poly ap = family_polynomial(family::A, m, n, 1);
            bivar_poly bp = family_polynomial(family::B, m, n, 1);
            CHECK(eval_y_one(np) == narayana_poly(m, n));
            CHECK(eval_y_zero(np) == narayana_noret_poly(m, n));
            CHECK(eval_y_one(ap) == ball_poly(m, n));
            CHECK(eval_y_one(bp) == ball_poly(m, n));
            if (n >= 2) CHECK(eval_y_zero(ap) == ball_noret_m_poly(m, n));
            CHECK(eval_y_zero(bp) == ball_noret_i_poly(m, n));
            CHECK(eval_all_one(np) == fuss_catalan(m, n));
            if (m * n >= 2) CHECK(eval_all_one(eval_y_zero(np)) == fuss_catalan_positive(m, n));
        }
}

TEST_CASE("B residue independence by brute force") {
    for (int m = 2; m <= 3; ++m)
        for (int n = 1; n <= 5; ++n)
            for (int t = 1; t <= n; ++t) {
                bivar_poly first = brute_dyck_polynomial(m, n, t, false,
                                                         stat_selector::residue_valleys(1),
                                                         stat_selector::returns());
                for (int i = 2; i < m; ++i)
                    CHECK(first == brute_dyck_polynomial(m, n, t, false,
                                                         stat_selector::residue_valleys(i),
                                                         stat_selector::returns()));
                CHECK(first == family_polynomial(family::B, m, n, t));
            }
}

TEST_CASE("all formulas stay integral for negative m") {
    for (long long m : {-3, -2, -1})
        for (long long n = 1; n <= 6; ++n)
            for (long long t = 1; t <= n; ++t)
                for (family f : {family::N, family::A, family::B, family::F, family::Fm, family::S,
                                 family::Sm, family::P, family::Pm})
                    CHECK_NOTHROW(family_polynomial(f, m, n, t));
}
