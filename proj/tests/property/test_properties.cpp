// Randomised and exhaustive invariants. Generators are seeded so failures
// reproduce; every failure prints the offending graph.

#include "betticone/betti.hpp"
#include "betticone/cone.hpp"
#include "betticone/homology.hpp"
#include "betticone/index_set.hpp"

#include "brute_force.hpp"

#include <catch_amalgamated.hpp>

#include <bit>
#include <functional>
#include <random>

using namespace betticone;

namespace {

const Graph L = make_named(NamedFamily::single_edge, 2);

std::string show(const Graph& g) { return serialize_graph(g, GraphFormat::edge_list); }

void for_all_graphs(int n, const std::function<void(const Graph&)>& fn) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        fn(Graph::from_edge_mask(n, mask));
    }
}

// Random downward-closed complex on n vertices: closure of a few random facets.
SimplicialComplex random_complex(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<VertexMask> pick(1, (VertexMask{1} << n) - 1);
    std::uniform_int_distribution<int> count(1, 5);
    std::vector<VertexMask> facets;
    for (int k = count(rng); k > 0; --k) {
        facets.push_back(pick(rng));
    }
    return SimplicialComplex::from_facets(n, facets);
}

}  // namespace

TEST_CASE("complement is an involution", "[property][graph]") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 500; ++trial) {
        const Graph g = testing::random_graph(rng, trial % 33);
        REQUIRE(complement(complement(g)) == g);
    }
}

TEST_CASE("adding an edge raises the height by one", "[property][graph]") {
    for (int n = 0; n <= 6; ++n) {
        for_all_graphs(n, [](const Graph& g) {
            INFO(show(g));
            REQUIRE(height(disjoint_union(g, L)) == height(g) + 1);
        });
    }
}

TEST_CASE("height equals n - dim - 1 of the independence complex", "[property][graph]") {
    for (int n = 1; n <= 7; ++n) {
        for_all_graphs(n, [n](const Graph& g) {
            INFO(show(g));
            REQUIRE(height(g) == n - independence_complex(g).dimension() - 1);
        });
    }
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = testing::random_graph(rng, 8, 0.3);
        REQUIRE(height(g) == 8 - independence_complex(g).dimension() - 1);
    }
}

TEST_CASE("covers are complements of faces", "[property][graph]") {
    for (int n = 1; n <= 6; ++n) {
        for_all_graphs(n, [n](const Graph& g) {
            const auto delta = independence_complex(g);
            const VertexMask all = g.vertex_mask();
            for (VertexMask u = 0; u <= all; ++u) {
                REQUIRE(is_vertex_cover(g, u) == delta.contains(all & ~u));
            }
            (void)n;
        });
    }
}

TEST_CASE("text formats round trip", "[property][io]") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = trial % 21;
        const Graph g = testing::random_graph(rng, n, (trial % 7) / 6.0);
        for (auto f : {GraphFormat::edge_list, GraphFormat::graph6}) {
            INFO(show(g));
            REQUIRE(parse_graph(serialize_graph(g, f), f) == g);
        }
    }
}

TEST_CASE("Euler-Poincare on induced subcomplexes", "[property][homology]") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = testing::random_graph(rng, 7);
        const auto delta = independence_complex(g);
        for (VertexMask u = 0; u < 128; u += 1 + trial % 5) {
            const auto sub = induced_subcomplex(delta, u);
            const auto h = reduced_homology_dims(sub);
            INFO(show(g) << " U=" << u);
            REQUIRE(h.euler_characteristic() == sub.reduced_euler_characteristic());
            for (auto v : h.dims) {
                REQUIRE(v >= 0);
            }
        }
    }
}

TEST_CASE("cones are acyclic", "[property][homology]") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 7;
        const auto base = random_complex(rng, n - 1);
        const VertexMask apex = VertexMask{1} << (n - 1);
        std::vector<VertexMask> faces;
        for (int k = 0; k <= base.dimension() + 1; ++k) {
            for (VertexMask f : base.faces_of_size(k)) {
                faces.push_back(f);
                faces.push_back(f | apex);
            }
        }
        const auto cone = SimplicialComplex::from_faces(n, faces);
        REQUIRE(reduced_homology_dims(cone).is_zero());
        REQUIRE(reduced_homology_dims(cone, FieldSpec::prime_field(2)).is_zero());
    }
}

TEST_CASE("suspension shifts homology", "[property][homology]") {
    for (int n = 0; n <= 5; ++n) {
        for_all_graphs(n, [](const Graph& g) {
            const auto base = reduced_homology_dims(independence_complex(g));
            const auto susp = reduced_homology_dims(independence_complex(disjoint_union(g, L)));
            INFO(show(g));
            for (int j = -1; j <= 6; ++j) {
                REQUIRE(susp(j) == base(j - 1));
            }
        });
    }
}

TEST_CASE("rationals and GF(32749) agree", "[property][homology]") {
    const auto p = FieldSpec::prime_field(32749);
    for (int n = 1; n <= 6; ++n) {
        for_all_graphs(n, [&](const Graph& g) {
            INFO(show(g));
            REQUIRE(reduced_homology_dims(independence_complex(g)) ==
                    reduced_homology_dims(independence_complex(g), p));
        });
    }
}

TEST_CASE("suspension rule on all graphs with n <= 5", "[property][betti]") {
    for (int n = 0; n <= 5; ++n) {
        for_all_graphs(n, [](const Graph& g) {
            INFO(show(g));
            REQUIRE(hochster_diagram(disjoint_union(g, L)) == suspend_diagram(hochster_diagram(g)));
        });
    }
}

TEST_CASE("padding rule on upper rows", "[property][betti]") {
    for (int l = 1; l <= 5; ++l) {
        for_all_graphs(l, [l](const Graph& g) {
            const auto b = hochster_diagram(complement(g));
            for (int m = l + 1; m <= 7; ++m) {
                const auto direct = hochster_diagram(complement(disjoint_union(g, Graph(m - l))));
                BettiDiagram upper;
                for (const auto& [p, v] : direct.entries()) {
                    if (p.d - p.i >= 3) {
                        upper.set(p, v);
                    }
                }
                INFO(show(g) << " m=" << m);
                REQUIRE(pad_complement_diagram(b, l, m).upper_rows == upper);
            }
        });
    }
}

TEST_CASE("diagram invariants over all graphs with n <= 6", "[property][betti]") {
    for (int n = 1; n <= 6; ++n) {
        for_all_graphs(n, [n](const Graph& g) {
            const auto b = hochster_diagram(g);
            const int h = height(g);
            INFO(show(g));
            REQUIRE(b == hochster_diagram(strip_isolated(g)));
            REQUIRE(check_support_cn(b, n));
            REQUIRE(check_support_cnh(b, n, h));
            for (int j = 1; j < h; ++j) {
                REQUIRE(hk_functional(b, j) == 0);
            }
            if (!b.empty()) {
                REQUIRE(regularity(b) <= min_maximal_matching_size(g) + 1);
            }
        });
    }
}

TEST_CASE("orders are strict total orders", "[property][index]") {
    for (int n = 1; n <= 10; ++n) {
        std::vector<std::pair<IndexSet, std::function<bool(IndexPair, IndexPair)>>> sets;
        sets.emplace_back(index_set(n), [](IndexPair p, IndexPair q) { return cmp_plain(p, q); });
        for (int h = 1; h < n; ++h) {
            sets.emplace_back(index_set(n, h), [h](IndexPair p, IndexPair q) { return cmp_h(p, q, h); });
        }
        for (const auto& [set, less] : sets) {
            const auto& m = set.members();
            for (IndexPair a : m) {
                REQUIRE_FALSE(less(a, a));
                for (IndexPair b : m) {
                    if (!(a == b)) {
                        REQUIRE(less(a, b) != less(b, a));
                    }
                    for (IndexPair c : m) {
                        if (less(a, b) && less(b, c)) {
                            REQUIRE(less(a, c));
                        }
                    }
                }
            }
            for (std::size_t k = 1; k < m.size(); ++k) {
                REQUIRE(less(m[k - 1], m[k]));
            }
        }
    }
}

TEST_CASE("height order is compatible with the edge shift", "[property][index]") {
    // Holds wherever the +L recipe is used: rows >= 2, excluding row 2 with i < h.
    auto shifted = [](IndexPair p, int h) { return p.row() >= 2 && !(p.row() == 2 && p.i < h); };
    int checked = 0;
    for (int n = 3; n <= 10; ++n) {
        for (int h = 2; h < n; ++h) {
            const auto set = index_set(n, h);
            for (IndexPair p : set.members()) {
                for (IndexPair q : set.members()) {
                    if (!shifted(p, h) || !cmp_h(p, q, h)) {
                        continue;
                    }
                    const IndexPair p1{p.i - 1, p.d - 2};
                    const IndexPair q1{q.i - 1, q.d - 2};
                    INFO(to_string(p) << " " << to_string(q) << " h=" << h);
                    REQUIRE((cmp_h(p1, q1, h - 1) || q1.i < 0));
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("counting identities", "[property][index]") {
    for (int n = 1; n <= 20; ++n) {
        const long long r = n / 2;
        REQUIRE(static_cast<long long>(index_set(n).size()) == (n % 2 == 0 ? r * r : r * r + r));
        for (int h = 0; h < n; ++h) {
            REQUIRE(static_cast<long long>(index_set(n, h).size()) == static_cast<long long>(h) * (n - h));
        }
    }
}

TEST_CASE("witness families verify up to n = 12", "[property][cone]") {
    DiagramCache cache;
    ConeOptions o;
    o.cache = &cache;
    for (int n = 2; n <= 12; ++n) {
        const auto plain = witnesses_cn(n, o);
        REQUIRE(plain.dimension == formula_dim(n));
        for (const auto& w : plain.witnesses) {
            REQUIRE(w.graph.vertex_count() == w.position.d);
        }
        for (int h = 1; h < n; ++h) {
            const auto r = witnesses_cnh(n, h, o);
            REQUIRE(r.dimension == formula_dim(n, h));
            for (const auto& w : r.witnesses) {
                const IndexPair p = w.position;
                REQUIRE(height(w.graph) == h);
                REQUIRE(w.graph.vertex_count() <= std::max(p.d, h + p.d - p.i - 1));
            }
        }
    }
}

TEST_CASE("enumeration matches the formulas for n <= 6", "[property][cone]") {
    for (int n = 1; n <= 6; ++n) {
        REQUIRE(enumerate_cone_dim(n, std::nullopt, false, false).dimension == formula_dim(n));
        for (int h = 1; h < n; ++h) {
            REQUIRE(enumerate_cone_dim(n, h, true, false).dimension == formula_dim(n, h));
        }
    }
}

TEST_CASE("HK subspace matches the formula for n <= 20", "[property][cone]") {
    for (int n = 2; n <= 20; ++n) {
        for (int h = 1; h < n; ++h) {
            REQUIRE(hk_subspace_dim(n, h) == formula_dim(n, h));
        }
    }
}
