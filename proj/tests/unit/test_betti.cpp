#include "betticone/betti.hpp"
#include "betticone/errors.hpp"

#include <catch_amalgamated.hpp>

using namespace betticone;

namespace {

Graph K(int m) { return make_named(NamedFamily::complete, m); }
Graph C(int m) { return make_named(NamedFamily::cycle, m); }
Graph E(int m) { return make_named(NamedFamily::empty, m); }
const Graph L = make_named(NamedFamily::single_edge, 2);
Graph operator+(const Graph& a, const Graph& b) { return disjoint_union(a, b); }

std::string beta(const Graph& g) { return to_canonical_string(hochster_diagram(g)); }

}  // namespace

// Expected strings come from tests/oracles/hochster_oracle.py.
TEST_CASE("Hochster sum on reference graphs", "[betti]") {
    CHECK(beta(K(3)) == "(0,2)=3;(1,3)=2");
    CHECK(beta(K(4)) == "(0,2)=6;(1,3)=8;(2,4)=3");
    CHECK(beta(L) == "(0,2)=1");
    CHECK(beta(L + L) == "(0,2)=2;(1,4)=1");
    CHECK(beta(L + L + L) == "(0,2)=3;(1,4)=3;(2,6)=1");
    CHECK(beta(C(5)) == "(0,2)=5;(1,3)=5;(2,5)=1");
    CHECK(beta(complement(C(5))) == "(0,2)=5;(1,3)=5;(2,5)=1");
    CHECK(beta(complement(C(6))) == "(0,2)=9;(1,3)=16;(2,4)=9;(3,6)=1");
    CHECK(beta(complement(C(4) + E(1))) == "(0,2)=6;(1,3)=8;(1,4)=1;(2,4)=4;(2,5)=1;(3,5)=1");
    CHECK(beta(complement(C(5) + E(1))) ==
          "(0,2)=10;(1,3)=20;(2,4)=15;(2,5)=1;(3,5)=5;(3,6)=1;(4,6)=1");
    CHECK(beta(complement(E(2) + K(2)) + L) ==
          "(0,2)=6;(1,3)=6;(1,4)=5;(2,4)=2;(2,5)=6;(3,6)=2");
    CHECK(beta(complement(C(4) + E(2))) ==
          "(0,2)=11;(1,3)=24;(1,4)=1;(2,4)=22;(2,5)=2;(3,5)=10;(3,6)=1;(4,6)=2");
    CHECK(beta(parse_graph("IheA@GUAo", GraphFormat::graph6)) ==
          "(0,2)=15;(1,3)=30;(1,4)=15;(2,4)=10;(2,5)=72;(2,6)=5;(3,6)=80;(3,7)=20;(4,7)=30;"
          "(4,8)=30;(5,9)=20;(6,10)=4");
    CHECK(hochster_diagram(E(5)).empty());
    CHECK(hochster_diagram(Graph(0)).empty());
    CHECK_THROWS_AS(hochster_diagram(E(17)), CapacityError);
}

TEST_CASE("Hochster options do not change the result", "[betti]") {
    const Graph g = parse_graph("IheA@GUAo", GraphFormat::graph6);
    const auto reference = hochster_diagram(g);
    for (unsigned workers : {1U, 2U, 3U, 8U}) {
        HochsterOptions o;
        o.workers = workers;
        CHECK(hochster_diagram(g, o) == reference);
        o.skip_cones = false;
        CHECK(hochster_diagram(g, o) == reference);
    }
    CHECK(hochster_diagram(g, FieldSpec::prime_field(2)) == reference);
}

TEST_CASE("complete graph closed form", "[betti]") {
    CHECK(to_canonical_string(diagram_complete(4)) == "(0,2)=6;(1,3)=8;(2,4)=3");
    CHECK(to_canonical_string(diagram_complete(2)) == "(0,2)=1");
    CHECK(diagram_complete(1).empty());
    CHECK(diagram_complete(0).empty());
    for (int m = 2; m <= 8; ++m) {
        CHECK(hochster_diagram(K(m)) == diagram_complete(m));
    }
}

TEST_CASE("cycle complement closed form", "[betti]") {
    CHECK(to_canonical_string(diagram_cycle_complement(5)) == "(0,2)=5;(1,3)=5;(2,5)=1");
    CHECK(to_canonical_string(diagram_cycle_complement(6)) == "(0,2)=9;(1,3)=16;(2,4)=9;(3,6)=1");
    for (int m = 4; m <= 9; ++m) {
        CHECK(hochster_diagram(complement(C(m))) == diagram_cycle_complement(m));
    }
    CHECK_THROWS_AS(diagram_cycle_complement(3), std::invalid_argument);
    // Evaluated at m = 3 the formula claims β_{0,3} = 1, but C_3^c = E_3.
    CHECK(to_canonical_string(detail::cycle_complement_literal(3)) == "(0,3)=1");
    CHECK(hochster_diagram(complement(C(3))).empty());
}

TEST_CASE("suspension rule", "[betti]") {
    const auto bl = hochster_diagram(L);
    CHECK(suspend_diagram(bl) == hochster_diagram(L + L));
    CHECK(suspend_diagram(suspend_diagram(hochster_diagram(K(2)))) == hochster_diagram(L + L + L));
    CHECK(suspend_diagram(BettiDiagram(3)) == bl);
    CHECK(suspend_diagram(bl).n_context() == 4);
}

TEST_CASE("padding rule", "[betti]") {
    SECTION("complete graph pads to a single row") {
        for (int l = 1; l <= 4; ++l) {
            const auto padded = pad_complement_diagram(hochster_diagram(complement(K(l))), l, 6);
            CHECK(padded.upper_rows.empty());
            CHECK(padded.row1_support.size() == 5);
        }
    }
    SECTION("C_5 padded to 6 vertices") {
        const auto padded = pad_complement_diagram(diagram_cycle_complement(5), 5, 6);
        CHECK(to_canonical_string(padded.upper_rows) == "(2,5)=1;(3,6)=1");
        CHECK(padded.upper_rows == BettiDiagram(6, {{{2, 5}, 1}, {{3, 6}, 1}}));
    }
    SECTION("C_4 padded to 5 vertices") {
        const auto padded = pad_complement_diagram(hochster_diagram(complement(C(4))), 4, 5);
        CHECK(to_canonical_string(padded.upper_rows) == "(1,4)=1;(2,5)=1");
    }
    SECTION("C_4 padded by two vertices needs multiplicities") {
        const auto padded = pad_complement_diagram(hochster_diagram(complement(C(4))), 4, 6);
        CHECK(to_canonical_string(padded.upper_rows) == "(1,4)=1;(2,5)=2;(3,6)=1");
    }
    SECTION("full diagram") {
        CHECK(pad_complement_diagram_full(C(4), 6) == hochster_diagram(complement(C(4) + E(2))));
        CHECK(pad_complement_diagram_full(C(5), 6) == hochster_diagram(complement(C(5) + E(1))));
    }
    CHECK_THROWS_AS(pad_complement_diagram(BettiDiagram(), 5, 5), std::invalid_argument);
}

TEST_CASE("Herzog-Kuhl functionals", "[betti]") {
    const auto k4 = diagram_complete(4);
    CHECK(hk_functional(k4, 0) == 1);
    CHECK(hk_functional(k4, 1) == 0);
    CHECK(hk_functional(k4, 2) == 0);
    CHECK(hk_functional(k4, 3) == 24);
    CHECK(hk_functional(k4, 4) == 216);
    const auto v = hk_vector(k4, 4);
    CHECK(v == std::vector<BigInt>{1, 0, 0, 24, 216});
    CHECK(hk_functional(BettiDiagram(), 3) == 0);
    CHECK(hk_functional(hochster_diagram(L), 0) == 1);
    CHECK_THROWS_AS(hk_functional(k4, -1), std::invalid_argument);
    // Large exponents stay exact.
    CHECK(hk_functional(BettiDiagram(20, {{{18, 20}, 1}}), 18) == BigInt("262144000000000000000000"));
}

TEST_CASE("regularity", "[betti]") {
    for (int m = 2; m <= 6; ++m) {
        CHECK(regularity(diagram_complete(m)) == 2);
    }
    CHECK(regularity(hochster_diagram(complement(C(5)))) == 3);
    CHECK(regularity(hochster_diagram(L + L + L)) == 4);
    CHECK_THROWS_AS(regularity(BettiDiagram()), UndefinedValueError);
}

TEST_CASE("support checks", "[betti]") {
    CHECK(check_support_cn(diagram_complete(6), 6));
    CHECK(check_support_cn(hochster_diagram(L + L + L), 6));
    CHECK_FALSE(check_support_cn(BettiDiagram(6, {{{0, 4}, 1}}), 6));
    CHECK_FALSE(check_support_cn(diagram_complete(6), 5));
    CHECK(check_support_cnh(diagram_complete(6), 6, 5));
    CHECK(check_support_cnh(hochster_diagram(complement(C(5))), 5, 3));
    CHECK(check_support_cnh(hochster_diagram(L + L + L), 6, 3));
    CHECK_FALSE(check_support_cnh(hochster_diagram(L + L + L), 6, 2));
    CHECK(check_support_cnh(BettiDiagram(), 4, 0));
}

TEST_CASE("diagram text forms", "[betti][io]") {
    const auto b = hochster_diagram(L + L);
    CHECK(parse_canonical(to_canonical_string(b)) == b);
    CHECK(parse_canonical("").empty());
    CHECK_THROWS_AS(parse_canonical("(0,2)=0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_canonical("(0,2)=1;(0,2)=1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_canonical("(0,2=1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_canonical("(0,2)=1;"), std::invalid_argument);

    CHECK(render_table(hochster_diagram(K(3))) == "   0 1\n1: 3 2\n");
    CHECK(render_table(b) == "   0 1 2\n1: 2 · ·\n2:   1\n");
    CHECK(render_csv(b) == "row,0,1,2\n1,2,,\n2,,1,\n");
    CHECK(render_table(BettiDiagram()) == "(zero diagram)\n");
    CHECK_THROWS_AS(BettiDiagram(3, {{{0, 2}, -1}}), std::invalid_argument);
}
