#include "verify_suite.hpp"

#include "betticone/betti.hpp"
#include "betticone/cone.hpp"
#include "betticone/errors.hpp"
#include "betticone/index_set.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace betticone::cli {

namespace {

struct Failure {
    std::string what;
};

std::string describe(const Graph& g) {
    std::string text = serialize_graph(g, GraphFormat::edge_list);
    std::replace(text.begin(), text.end(), '\n', ';');
    while (!text.empty() && text.back() == ';') {
        text.pop_back();
    }
    return "\"" + text + "\"";
}

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw Failure{what};
    }
}

void for_all_graphs(int n, const std::function<void(const Graph&)>& fn) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        fn(Graph::from_edge_mask(n, mask));
    }
}

std::string range(int lo, int hi) {
    return lo > hi ? "(empty)" : std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace

std::vector<CheckResult> run_verify_suite(int max_n, bool dedupe, unsigned workers,
                                          const FieldSpec& field) {
    const int N = std::clamp(max_n, 2, 7);
    const int corpus_n = std::min(N, 6);
    ConeOptions options;
    options.field = field;
    options.workers = workers;
    DiagramCache cache;
    options.cache = &cache;
    auto beta = [&](const Graph& g) { return cache.get(g, field); };

    std::vector<CheckResult> results;
    auto check = [&](std::string name, std::string scope, const std::function<void()>& body) {
        CheckResult r{std::move(name), std::move(scope), true, "", 0.0};
        const auto t0 = std::chrono::steady_clock::now();
        try {
            body();
        } catch (const Failure& f) {
            r.passed = false;
            r.detail = f.what;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(std::move(r));
    };

    const int k_hi = std::min(N + 2, 8);
    check("closed form K_m", "m=" + range(2, k_hi), [&] {
        for (int m = 2; m <= k_hi; ++m) {
            require(beta(make_named(NamedFamily::complete, m)) == diagram_complete(m),
                    "mismatch at m=" + std::to_string(m));
        }
    });

    const int c_hi = std::min(N + 3, 9);
    check("closed form C_m^c", "m=" + range(4, c_hi), [&] {
        for (int m = 4; m <= c_hi; ++m) {
            require(beta(complement(make_named(NamedFamily::cycle, m))) ==
                        diagram_cycle_complement(m),
                    "mismatch at m=" + std::to_string(m));
        }
    });

    const int s_hi = std::min(N, 5);
    const Graph edge = make_named(NamedFamily::single_edge, 2);
    check("suspension rule", "all graphs n=" + range(1, s_hi), [&] {
        for (int n = 1; n <= s_hi; ++n) {
            for_all_graphs(n, [&](const Graph& g) {
                require(hochster_diagram(disjoint_union(g, edge), field) ==
                            suspend_diagram(hochster_diagram(g, field)),
                        "graph " + describe(g));
            });
        }
    });

    const int m_hi = std::min(N + 1, 7);
    check("padding rule (rows >= 2)", "l<m<=" + std::to_string(m_hi) + ", l<=5", [&] {
        for (int m = 2; m <= m_hi; ++m) {
            for (int l = 1; l < m && l <= 5; ++l) {
                for_all_graphs(l, [&](const Graph& g) {
                    const auto padded = pad_complement_diagram(hochster_diagram(complement(g), field), l, m);
                    const auto direct =
                        hochster_diagram(complement(disjoint_union(g, Graph(m - l))), field);
                    BettiDiagram upper;
                    for (const auto& [p, v] : direct.entries()) {
                        if (p.d - p.i >= 3) {
                            upper.set(p, v);
                        }
                    }
                    require(upper == padded.upper_rows,
                            "graph " + describe(g) + " padded to m=" + std::to_string(m));
                    for (IndexPair p : padded.row1_support) {
                        require(direct.at(p) != 0, "row-1 zero at " + to_string(p) + " for graph " +
                                                       describe(g) + ", m=" + std::to_string(m));
                    }
                });
            }
        }
    });

    check("isolated-vertex invariance", "all graphs n=" + range(1, corpus_n), [&] {
        for (int n = 1; n <= corpus_n; ++n) {
            for_all_graphs(n, [&](const Graph& g) {
                require(hochster_diagram(g, field) == hochster_diagram(strip_isolated(g), field),
                        "graph " + describe(g));
            });
        }
    });

    // HK vanishing, support and regularity share one pass over the corpus.
    std::vector<std::string> corpus_failures(3);
    const auto t0 = std::chrono::steady_clock::now();
    for (int n = 1; n <= corpus_n; ++n) {
        for_all_graphs(n, [&](const Graph& g) {
            const BettiDiagram b = hochster_diagram(g, field);
            const int h = height(g);
            for (int j = 1; j < h && corpus_failures[0].empty(); ++j) {
                if (hk_functional(b, j) != 0) {
                    corpus_failures[0] = "HK_" + std::to_string(j) + " != 0 for graph " + describe(g);
                }
            }
            if (corpus_failures[1].empty() &&
                !(check_support_cn(b, n) && check_support_cnh(b, n, h))) {
                corpus_failures[1] = "support violation for graph " + describe(g);
            }
            if (corpus_failures[2].empty() && !b.empty() &&
                regularity(b) > min_maximal_matching_size(g) + 1) {
                corpus_failures[2] = "regularity bound fails for graph " + describe(g);
            }
        });
    }
    const double shared =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const char* names[] = {"HK vanishing", "support patterns", "regularity bound"};
    for (int k = 0; k < 3; ++k) {
        results.push_back({names[k], "all graphs n=" + range(1, corpus_n), corpus_failures[k].empty(),
                           corpus_failures[k], k == 0 ? shared : 0.0});
    }

    const int f_hi = std::min(N, 5);
    check("Q vs GF(32749)", "all graphs n=" + range(1, f_hi), [&] {
        const FieldSpec p = FieldSpec::prime_field(32749);
        for (int n = 1; n <= f_hi; ++n) {
            for_all_graphs(n, [&](const Graph& g) {
                require(hochster_diagram(g, FieldSpec::rationals()) == hochster_diagram(g, p),
                        "graph " + describe(g));
            });
        }
    });

    check("enumeration = formula (C_n)", "n=" + range(2, N), [&] {
        for (int n = 2; n <= N; ++n) {
            const auto r = enumerate_cone_dim(n, std::nullopt, dedupe || n >= 7, false, options);
            require(r.dimension == formula_dim(n) && r.certification == Certification::certified,
                    "n=" + std::to_string(n) + " gave " + std::to_string(r.dimension));
        }
    });

    check("enumeration = formula (C_n^h)", "n=" + range(2, corpus_n) + ", 1<=h<n", [&] {
        for (int n = 2; n <= corpus_n; ++n) {
            for (int h = 1; h < n; ++h) {
                const auto r = enumerate_cone_dim(n, h, dedupe, false, options);
                require(r.dimension == formula_dim(n, h), "n=" + std::to_string(n) + ", h=" +
                                                              std::to_string(h) + " gave " +
                                                              std::to_string(r.dimension));
            }
        }
    });

    const int w_hi = std::min(2 * N, 12);
    check("witnesses = formula", "n=" + range(2, w_hi) + ", all h", [&] {
        for (int n = 2; n <= w_hi; ++n) {
            require(witnesses_cn(n, options).dimension == formula_dim(n), "C_n at n=" + std::to_string(n));
            for (int h = 1; h < n; ++h) {
                require(witnesses_cnh(n, h, options).dimension == formula_dim(n, h),
                        "C_n^h at n=" + std::to_string(n) + ", h=" + std::to_string(h));
            }
        }
    });

    check("hk-subspace = formula", "1<=h<n<=20", [&] {
        for (int n = 2; n <= 20; ++n) {
            for (int h = 1; h < n; ++h) {
                require(hk_subspace_dim(n, h) == formula_dim(n, h),
                        "n=" + std::to_string(n) + ", h=" + std::to_string(h));
            }
        }
    });

    check("counting identities", "n<=20", [&] {
        for (int n = 1; n <= 20; ++n) {
            require(static_cast<long long>(index_set(n).size()) == formula_dim(n),
                    "|S_n| at n=" + std::to_string(n));
            for (int h = 0; h < n; ++h) {
                require(static_cast<long long>(index_set(n, h).size()) == static_cast<long long>(h) * (n - h),
                        "|S_n^h| at n=" + std::to_string(n) + ", h=" + std::to_string(h));
            }
        }
    });

    return results;
}

}  // namespace betticone::cli
