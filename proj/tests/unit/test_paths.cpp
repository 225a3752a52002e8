#include <doctest.h>

#include <algorithm>
#include <set>

#include "mtpath/closedform.hpp"
#include "mtpath/paths.hpp"

using namespace mtpath;

TEST_CASE("dyck enumeration counts and edge cases") {
    CHECK(enumerate_dyck(2, 4, 2).size() == 25);

    auto forced = enumerate_dyck(3, 4, 4);
    REQUIRE(forced.size() == 1);
    CHECK(forced[0].to_string() == "NNNNEEEEEEEEEEEE");

    auto small = enumerate_dyck(1, 2, 1);
    REQUIRE(small.size() == 2);
    CHECK(small[0].to_string() == "NNEE");
    CHECK(small[1].to_string() == "NENE");
    CHECK(dyck_family_size(1, 2, 1) == bigint(2));

    CHECK_THROWS_AS(enumerate_dyck(2, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_dyck(0, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_dyck(2, -1, 1), std::invalid_argument);
}

TEST_CASE("generation is deterministic, ordered and valid") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 6; ++n)
            for (int t = 1; t <= n; ++t) {
                auto paths = enumerate_dyck(m, n, t);
                CHECK(bigint(static_cast<long long>(paths.size())) == dyck_family_size(m, n, t));
                CHECK(paths == enumerate_dyck(m, n, t));
                CHECK(std::is_sorted(paths.begin(), paths.end()));
                for (const auto& p : paths) {
                    CHECK(p.valid());
                    CHECK(p.is_dyck());
                    CHECK(p.height() == n);
                }
                auto schr = enumerate_schroder(m, n, t, schroder_variant::small);
                CHECK(std::is_sorted(schr.begin(), schr.end()));
            }
}

TEST_CASE("no-returns enumeration matches Cat+ at t=1") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 2; n <= 6; ++n) {
            auto plus = enumerate_dyck(m, n, 1, true);
            CHECK(bigint(static_cast<long long>(plus.size())) == fuss_catalan_positive(m, n));
            for (const auto& p : plus) CHECK(compute_stats(p).ret == 0);
        }
}

TEST_CASE("path statistics") {
    lattice_path staircase{2, 3, {}};
    staircase = lattice_path::from_string(2, 3, "NNNEEEEEE");
    path_stats st = compute_stats(staircase);
    CHECK(st.val == 0);
    CHECK(st.ret == 0);
    CHECK(st.dg == 0);
    CHECK(st.codim == 0);

    // returns are m-valleys; cornered diagonals are m-diagonals
    for (const auto& p : enumerate_schroder(2, 5, 1, schroder_variant::small)) {
        path_stats s = compute_stats(p);
        CHECK(s.ret <= s.val_by_residue[2]);
        CHECK(s.cd <= s.dg_m);
        CHECK(s.dg_m <= s.dg);
        int total = 0;
        for (int i = 1; i <= 2; ++i) total += s.val_by_residue[i];
        CHECK(total == s.val);
        CHECK(s.codim >= 0);
    }
}

TEST_CASE("aggregate polynomials at (2,4,2) match the pinned values") {
    auto d = enumerate_dyck(2, 4, 2);
    CHECK(brute_polynomial(d, stat_selector::valleys(), stat_selector::returns()) ==
          bivar_poly::from_terms({{2, 2, 1}, {2, 1, 4}, {2, 0, 9}, {1, 1, 2}, {1, 0, 8}, {0, 0, 1}}));
    CHECK(brute_polynomial(d, stat_selector::m_valleys(2), stat_selector::returns()) ==
          bivar_poly::from_terms({{2, 2, 1}, {2, 1, 1}, {2, 0, 1}, {1, 1, 5}, {1, 0, 8}, {0, 0, 9}}));
}

TEST_CASE("schroder enumeration variants") {
    CHECK(enumerate_schroder(2, 4, 2, schroder_variant::small_mdiv).size() == 47);
    CHECK(enumerate_schroder(2, 4, 2, schroder_variant::positive_mdiv).size() == 37);
    auto forced = enumerate_schroder(3, 4, 4, schroder_variant::small);
    REQUIRE(forced.size() == 1);
    CHECK(forced[0].is_dyck());

    for (const auto& p : enumerate_schroder(2, 4, 2, schroder_variant::small_mdiv)) {
        CHECK(p.valid());
        CHECK(p.is_small());
        CHECK(p.is_m_divisible());
    }
    for (const auto& p : enumerate_schroder(2, 4, 2, schroder_variant::positive))
        CHECK(p.is_positive());

    // positive paths are exactly the small paths avoiding the line
    auto smalls = enumerate_schroder(2, 4, 2, schroder_variant::small);
    std::set<lattice_path> positives;
    for (const auto& p : enumerate_schroder(2, 4, 2, schroder_variant::positive)) positives.insert(p);
    for (const auto& p : smalls) CHECK(positives.count(p) == (p.is_positive() ? 1u : 0u));
}

TEST_CASE("brute_polynomial rejects mixed parameters and handles empty input") {
    CHECK(brute_polynomial({}, stat_selector::valleys(), stat_selector::returns()).is_zero());
    auto a = enumerate_dyck(1, 2, 1);
    auto b = enumerate_dyck(2, 2, 1);
    std::vector<lattice_path> mixed = {a[0], b[0]};
    CHECK_THROWS_AS(brute_polynomial(mixed, stat_selector::valleys(), stat_selector::returns()),
                    std::invalid_argument);
}
