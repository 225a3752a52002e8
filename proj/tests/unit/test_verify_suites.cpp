#include <doctest.h>

#include "mtpath/verify.hpp"

using namespace mtpath;

TEST_CASE("all verification suites pass on a small grid") {
    verify_options opt{2, 3, 2, false};
    for (const auto& rep : run_suites("all", opt)) {
        INFO("suite ", rep.suite);
        CHECK(rep.failed() == 0);
        CHECK(rep.passed() == static_cast<int>(rep.cases.size()));
        CHECK(rep.ok());
    }
    CHECK_THROWS_AS(run_suites("nonsense", opt), std::invalid_argument);
}

TEST_CASE("single suite selection") {
    verify_options opt{1, 3, 1, false};
    auto reports = run_suites("bijection", opt);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].suite == "bijection");
    CHECK(reports[0].ok());
    CHECK(reports[0].seconds >= 0.0);
}
