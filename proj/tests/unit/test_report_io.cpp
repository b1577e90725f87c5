#include "betticone/report_io.hpp"

#include <catch_amalgamated.hpp>

using namespace betticone;

TEST_CASE("structured text round trip", "[io]") {
    const auto w = witnesses_cnh(6, 3);
    const auto text = to_structured_text(w);
    const auto back = parse_structured_text(text);
    CHECK(back.n == 6);
    CHECK(back.h == 3);
    CHECK(back.method == ConeMethod::witnesses);
    CHECK(back.dimension == 7);
    CHECK(back.certification == Certification::certified);
    REQUIRE(back.witnesses.size() == w.witnesses.size());
    for (std::size_t k = 0; k < w.witnesses.size(); ++k) {
        CHECK(back.witnesses[k].graph == w.witnesses[k].graph);
        CHECK(back.witnesses[k].diagram == w.witnesses[k].diagram);
        CHECK(back.witnesses[k].label == w.witnesses[k].label);
    }
    CHECK(to_structured_text(back) == text);

    const auto e = enumerate_cone_dim(5, std::nullopt, true, false);
    const auto e_back = parse_structured_text(to_structured_text(e));
    CHECK(e_back.stats->distinct_diagrams == e.stats->distinct_diagrams);
    CHECK(to_structured_text(e_back, false) == to_structured_text(e, false));
}

TEST_CASE("structured text is key sorted", "[io]") {
    const auto text = to_structured_text(cone_dim(ConeMethod::formula, 6, std::nullopt));
    const auto cert = text.find("\"certification\"");
    const auto dim = text.find("\"dimension\"");
    const auto n = text.find("\"n\"");
    CHECK(cert < dim);
    CHECK(dim < n);
    CHECK_THROWS_AS(parse_structured_text("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_structured_text("{}"), std::invalid_argument);
}
