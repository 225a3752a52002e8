#include <doctest.h>

#include "mtpath/reciprocity.hpp"

using namespace mtpath;

TEST_CASE("Catalan reciprocity") {
    CHECK(fuss_catalan(-2, 3) == bigint(2));
    CHECK(fuss_catalan_positive(1, 3) == bigint(2));
    for (int m = 1; m <= 3; ++m)
        for (int n = 2; n <= 7; ++n) CHECK(verify_identity(reciprocity_id::catalan, m, n).ok);
}

TEST_CASE("coefficient-level Dyck/Schroeder reciprocity at (2,4)") {
    for (long long a = 0; a <= 3; ++a)
        for (long long b = 0; b <= a; ++b) {
            bigint lhs = family_coefficient(family::A, -2, 4, 1, a, b);
            bigint rhs = family_coefficient(family::Pm, 2, 4, 1, a, b);
            if ((3 - a) % 2 != 0) rhs = -rhs;
            CHECK(lhs == rhs);
        }
    CHECK(verify_identity(reciprocity_id::dyck_schroder, 2, 4).ok);
}

TEST_CASE("the nine polynomial identities hold on the grid") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 2; n <= 6; ++n)
            for (auto id : {reciprocity_id::A, reciprocity_id::B, reciprocity_id::N,
                            reciprocity_id::F, reciprocity_id::Fm, reciprocity_id::S,
                            reciprocity_id::Sm, reciprocity_id::P, reciprocity_id::Pm}) {
                auto rep = verify_identity(id, m, n);
                INFO(reciprocity_name(id), " m=", m, " n=", n, ": ", rep.detail);
                CHECK(rep.ok);
            }
}

TEST_CASE("identity B spelled out at (2,4)") {
    auto rep = verify_identity(reciprocity_id::B, 2, 4);
    CHECK(rep.ok);
    CHECK(rep.detail.empty());
}

TEST_CASE("simplex lattice points") {
    auto pts = simplex_points(2, 3);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].coords == std::vector<long long>{0, 0});
    CHECK(pts[0].walls_hit == 1);
    CHECK(pts[1].coords == std::vector<long long>{1, -1});
    CHECK(pts[1].walls_hit == 0);

    auto tiny = simplex_points(2, 1);
    REQUIRE(tiny.size() == 1);
    CHECK(tiny[0].coords == std::vector<long long>{0, 0});
    CHECK(tiny[0].walls_hit == 1);

    for (const auto& pt : simplex_points(4, 9)) {
        long long sum = 0;
        for (std::size_t i = 0; i + 1 < pt.coords.size(); ++i) {
            CHECK(pt.coords[i] >= pt.coords[i + 1]);
            sum += pt.coords[i];
        }
        sum += pt.coords.back();
        CHECK(sum == 0);
        CHECK(pt.coords.front() - pt.coords.back() <= 9);
    }
    CHECK_THROWS_AS(simplex_points(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(simplex_points(3, 0), std::invalid_argument);
}

TEST_CASE("wall counts match the Narayana numbers") {
    auto rep = nar_wall_check(1, 2);
    CHECK(rep.ok);
    auto hist3 = wall_histogram(2, 3);
    CHECK(hist3[0] == bigint(1));
    CHECK(hist3[1] == bigint(1));
    auto hist1 = wall_histogram(2, 1);
    CHECK(hist1[0] == bigint(0));
    CHECK(hist1[1] == bigint(1));
    for (int m = 1; m <= 3; ++m)
        for (int n = 2; n <= 4; ++n) CHECK(nar_wall_check(m, n).ok);
}

TEST_CASE("Ehrhart face counting") {
    // n=2, m=1, k=0 instance of the reciprocity: Nar+(-1,2,1) = (+1)*Nar(1,2,1)
    CHECK(narayana_number_positive(-1, 2, 1) == narayana_number(1, 2, 1));
    CHECK(narayana_number_positive(-1, 2, 1) == bigint(1));
    // k=1 (full simplex): Nar+(-1,2,0) = -(Nar(1,2,1) + Nar(1,2,0)) = -L_A(3)
    CHECK(narayana_number_positive(-1, 2, 0) ==
          -(narayana_number(1, 2, 1) + narayana_number(1, 2, 0)));
    CHECK(simplex_points(2, 3).size() == 2);
    auto rep = ehrhart_face_check(2, 1);
    CHECK(rep.ok);
    for (int m = 1; m <= 3; ++m)
        for (int n = 2; n <= 4; ++n) {
            auto r = ehrhart_face_check(n, m);
            INFO("n=", n, " m=", m, ": ", r.detail);
            CHECK(r.ok);
        }
}
