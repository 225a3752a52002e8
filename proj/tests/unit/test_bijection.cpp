#include <doctest.h>

#include "mtpath/bijection.hpp"
#include "mtpath/closedform.hpp"

using namespace mtpath;

TEST_CASE("marked universe cardinalities") {
    CHECK(enumerate_marked(2, 4, 2, true).size() == 47);   // = |Schroeder small m-div|
    CHECK(enumerate_marked(2, 4, 2, false).size() == 77);  // = sum over paths of 2^val
    CHECK(enumerate_marked(3, 3, 3, false).size() == 1);
    CHECK(enumerate_marked(3, 3, 3, true).size() == 1);
}

TEST_CASE("hand-built conversion") {
    marked_path mp{lattice_path::from_string(1, 1, "NENE"), {{1, 1}}};
    lattice_path s = to_schroder(mp);
    CHECK(s.to_string() == "NDE");
    CHECK(from_schroder(s) == mp);

    marked_path empty_marks{lattice_path::from_string(1, 1, "NENE"), {}};
    CHECK(to_schroder(empty_marks) == empty_marks.base);

    lattice_path plain = lattice_path::from_string(2, 1, "NEENEE");
    marked_path back = from_schroder(plain);
    CHECK(back.base == plain);
    CHECK(back.marks.empty());
}

TEST_CASE("marks must be valleys; inputs must be small") {
    marked_path bad{lattice_path::from_string(1, 1, "NNEE"), {{1, 1}}};
    CHECK_THROWS_AS(to_schroder(bad), std::invalid_argument);
    // NED (m=1): its diagonal starts at (1,1), on the line x = my, so the
    // path is not small and has no marked-path preimage
    CHECK_THROWS_AS(from_schroder(lattice_path::from_string(1, 1, "NED")), std::domain_error);
}

TEST_CASE("round trip, transport and image polynomial over the worked example") {
    bivar_poly image_poly;
    for_each_marked(2, 4, 2, true, [&](const marked_path& mp) {
        lattice_path s = to_schroder(mp);
        CHECK(s.valid());
        CHECK(s.is_small());
        CHECK(s.is_m_divisible());
        CHECK(from_schroder(s) == mp);
        path_stats stp = compute_stats(mp.base), sts = compute_stats(s);
        CHECK(stp.val == sts.val + sts.dg);
        CHECK(stp.ret == sts.ret + sts.cd);
        image_poly.add_term(sts.dg_m, sts.cd, bigint(1));
    });
    CHECK(image_poly == family_polynomial(family::Sm, 2, 4, 2));
}

TEST_CASE("restriction: m-valley marks iff m-divisible image") {
    for_each_marked(2, 4, 1, false, [&](const marked_path& mp) {
        bool all_m = true;
        for (const auto& [vx, vy] : mp.marks) all_m = all_m && vx % mp.base.m == 0;
        CHECK(to_schroder(mp).is_m_divisible() == all_m);
    });
}
