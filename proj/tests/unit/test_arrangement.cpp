#include <doctest.h>

#include "mtpath/arrangement.hpp"
#include "mtpath/closedform.hpp"
#include "mtpath/substitute.hpp"

using namespace mtpath;

TEST_CASE("region enumeration counts") {
    CHECK(enumerate_regions(1, 2).size() == 2);
    CHECK(enumerate_regions(1, 3).size() == 5);
    CHECK(enumerate_regions(2, 3).size() == 12);
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n)
            CHECK(bigint(static_cast<long long>(enumerate_regions(m, n).size())) ==
                  fuss_catalan(m, n));
    CHECK_THROWS_AS(enumerate_regions(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_regions(2, 6), std::invalid_argument);
    CHECK(enumerate_regions(2, 6, true).size() == fuss_catalan(2, 6).to_long_long());
}

TEST_CASE("separating_walls rejects infeasible codes") {
    // 0 < x0-x1 < 1 and 0 < x1-x2 < 1 force x0-x2 < 2, incompatible with
    // x0-x2 > 2
    region_code bad{3, 2, {0, 2, 0}};
    CHECK_FALSE(region_feasible(bad));
    CHECK_THROWS_AS(separating_walls(bad), std::invalid_argument);
}

TEST_CASE("separating walls of the two m=1, n=2 regions") {
    auto regions = enumerate_regions(1, 2);
    REQUIRE(regions.size() == 2);
    // lexicographic order: floor 0 (origin side) first, then floor 1
    wall_sets near = separating_walls(regions[0]);
    CHECK(near.separating.empty());
    wall_sets far = separating_walls(regions[1]);
    REQUIRE(far.separating.size() == 1);
    CHECK(far.separating[0] == std::pair{0, 1});
    CHECK(far.simple == far.separating);
}

TEST_CASE("h polynomial equals the A family") {
    CHECK(region_h_polynomial(2, 3) ==
          bivar_poly::from_terms({{2, 2, 1}, {1, 1, 4}, {1, 0, 2}, {0, 0, 5}}));
    CHECK(region_h_polynomial(1, 2) == bivar_poly::from_terms({{1, 1, 1}, {0, 0, 1}}));
    CHECK(region_h_polynomial(1, 3) ==
          bivar_poly::from_terms({{2, 2, 1}, {1, 1, 2}, {1, 0, 1}, {0, 0, 1}}));
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n)
            CHECK(region_h_polynomial(m, n) == family_polynomial(family::A, m, n, 1));
}

TEST_CASE("flats") {
    CHECK(enumerate_flats(2, 3).size() == 21);
    auto flats12 = enumerate_flats(1, 2);
    REQUIRE(flats12.size() == 3);
    for (const auto& fd : flats12) CHECK(fd.dim + static_cast<int>(fd.walls.size()) == 1);
    CHECK(flats_f_polynomial(1, 2) ==
          bivar_poly::from_terms({{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}));
    CHECK(flats_f_polynomial(2, 3) ==
          bivar_poly::from_terms({{2, 0, 7}, {1, 1, 4}, {0, 2, 1}, {1, 0, 6}, {0, 1, 2}, {0, 0, 1}}));
    // flats with all simple walls selected have ssw = 0
    for (const auto& fd : enumerate_flats(2, 3)) {
        bool all_simple_selected = true;
        wall_sets w = separating_walls(fd.region);
        for (const auto& sw : w.simple)
            all_simple_selected = all_simple_selected &&
                                  std::find(fd.walls.begin(), fd.walls.end(), sw) != fd.walls.end();
        if (all_simple_selected) CHECK(fd.ssw == 0);
    }
}

TEST_CASE("f polynomial equals the Chapoton transform of A") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n) {
            substitution_spec fs;
            fs.x_image = {bivar_poly::from_terms({{1, 0, 1}, {0, 0, 1}}), bivar_poly::var_x()};
            fs.y_image = {bivar_poly::from_terms({{0, 1, 1}, {0, 0, 1}}),
                          bivar_poly::from_terms({{1, 0, 1}, {0, 0, 1}})};
            fs.prefactor = bivar_poly::monomial(n - 1, 0);
            CHECK(flats_f_polynomial(m, n) ==
                  substitute(family_polynomial(family::A, m, n, 1), fs));
            // evaluating at x = y = 1 counts the flats
            CHECK(eval_all_one(flats_f_polynomial(m, n)) ==
                  bigint(static_cast<long long>(enumerate_flats(m, n).size())));
        }
}

TEST_CASE("difference constraint feasibility") {
    // x0 - x1 > 2 with x0 - x1 < 4: feasible band
    std::vector<diff_edge> edges = {{0, 1, {-2, -1}}, {1, 0, {4, -1}}};
    CHECK(diff_system_feasible(2, edges));
    // tighten to x0 - x1 > 3: still a nonempty open band (3, 4)
    edges.push_back({0, 1, {-3, -1}});
    CHECK(diff_system_feasible(2, edges));
    // demand x0 - x1 > 5 as well: contradicts < 4
    edges.push_back({0, 1, {-5, -1}});
    CHECK_FALSE(diff_system_feasible(2, edges));
    // strictness matters: x0 - x1 > 1 together with x0 - x1 < 1 is infeasible
    std::vector<diff_edge> strict = {{0, 1, {-1, -1}}, {1, 0, {1, -1}}};
    CHECK_FALSE(diff_system_feasible(2, strict));
    // but x0 - x1 >= 1 with x0 - x1 <= 1 is fine (the hyperplane itself)
    std::vector<diff_edge> weak = {{0, 1, {-1, 0}}, {1, 0, {1, 0}}};
    CHECK(diff_system_feasible(2, weak));
    // three-node chain: x0 - x1 > 1, x1 - x2 > 1, x0 - x2 < 2 is infeasible
    std::vector<diff_edge> chain = {{0, 1, {-1, -1}}, {1, 2, {-1, -1}}, {2, 0, {2, -1}}};
    CHECK_FALSE(diff_system_feasible(3, chain));
}
