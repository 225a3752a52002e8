#include <doctest.h>

#include <json.hpp>

#include "mtpath/bivar_poly.hpp"
#include "mtpath/closedform.hpp"

using namespace mtpath;
using nlohmann::json;

TEST_CASE("wire terms round-trip through the polynomial parser") {
    bivar_poly p = family_polynomial(family::Sm, 3, 6, 2);
    auto terms = p.to_wire_terms();
    CHECK(bivar_poly::from_wire_terms(terms) == p);

    // through an actual JSON document, coefficients as decimal strings
    json doc = json::array();
    for (const auto& t : terms) doc.push_back({{"a", t.a}, {"b", t.b}, {"coeff", t.coeff}});
    std::string encoded = doc.dump();
    json parsed = json::parse(encoded);
    std::vector<bivar_poly::wire_term> back;
    for (const auto& item : parsed)
        back.push_back({item["a"].get<int>(), item["b"].get<int>(),
                        item["coeff"].get<std::string>()});
    CHECK(bivar_poly::from_wire_terms(back) == p);
}

TEST_CASE("wire terms preserve coefficients beyond 64 bits") {
    bivar_poly big = bivar_poly::monomial(1, 2, bigint::pow(bigint(10), 25) + bigint(7));
    auto terms = big.to_wire_terms();
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].coeff == "10000000000000000000000007");
    CHECK(bivar_poly::from_wire_terms(terms) == big);
}

TEST_CASE("canonical term order is deterministic") {
    bivar_poly p = family_polynomial(family::N, 2, 5, 1);
    auto t1 = p.to_wire_terms();
    auto t2 = family_polynomial(family::N, 2, 5, 1).to_wire_terms();
    REQUIRE(t1.size() == t2.size());
    for (std::size_t i = 0; i < t1.size(); ++i) {
        CHECK(t1[i].a == t2[i].a);
        CHECK(t1[i].b == t2[i].b);
        CHECK(t1[i].coeff == t2[i].coeff);
    }
    // descending total degree, then descending x-exponent
    for (std::size_t i = 1; i < t1.size(); ++i) {
        int d0 = t1[i - 1].a + t1[i - 1].b, d1 = t1[i].a + t1[i].b;
        CHECK((d0 > d1 || (d0 == d1 && t1[i - 1].a > t1[i].a)));
    }
}
