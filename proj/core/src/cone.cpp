#include "betticone/cone.hpp"

#include "betticone/betti.hpp"
#include "betticone/errors.hpp"
#include "betticone/homology.hpp"
#include "betticone/linalg.hpp"
#include "betticone/simplicial_complex.hpp"
#include "hochster_kernel.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <stdexcept>
#include <unordered_set>

#if defined(__x86_64__) && defined(__GNUC__)
#include <immintrin.h>
#define BETTICONE_HAVE_PEXT 1
#endif

namespace betticone {

std::string to_string(ConeMethod method) {
    switch (method) {
        case ConeMethod::formula:
            return "formula";
        case ConeMethod::witnesses:
            return "witnesses";
        case ConeMethod::enumeration:
            return "enumerate";
        case ConeMethod::hk_subspace:
            return "hk-subspace";
    }
    return "formula";
}

ConeMethod parse_cone_method(const std::string& text) {
    if (text == "formula") {
        return ConeMethod::formula;
    }
    if (text == "witnesses") {
        return ConeMethod::witnesses;
    }
    if (text == "enumerate" || text == "enumeration") {
        return ConeMethod::enumeration;
    }
    if (text == "hk-subspace" || text == "hk_subspace") {
        return ConeMethod::hk_subspace;
    }
    throw std::invalid_argument("unknown method '" + text +
                                "' (expected formula, witnesses, enumerate or hk-subspace)");
}

std::string to_string(Certification c) {
    switch (c) {
        case Certification::certified:
            return "certified";
        case Certification::partial:
            return "partial";
        case Certification::not_applicable:
            return "not-applicable";
    }
    return "not-applicable";
}

BettiDiagram DiagramCache::get(const Graph& g, const FieldSpec& field) {
    const std::string key = field.label() + ":" + serialize_graph(g, GraphFormat::graph6);
    {
        std::lock_guard lock(mutex_);
        if (const auto it = entries_.find(key); it != entries_.end()) {
            return it->second;
        }
    }
    BettiDiagram b = hochster_diagram(g, field);
    std::lock_guard lock(mutex_);
    return entries_.emplace(key, std::move(b)).first->second;
}

std::size_t DiagramCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

namespace {

void check_height_arg(int n, int h) {
    if (h < 1 || h > n - 1) {
        throw std::invalid_argument("height must lie in 1.." + std::to_string(n - 1) + ", got " +
                                    std::to_string(h));
    }
}

BettiDiagram diagram_of(const Graph& g, const ConeOptions& options) {
    if (options.cache != nullptr) {
        return options.cache->get(g, options.field);
    }
    return hochster_diagram(g, options.field);
}

Graph repeat_edges(Graph g, int copies) {
    for (int k = 0; k < copies; ++k) {
        g = disjoint_union(g, make_named(NamedFamily::single_edge, 2));
    }
    return g;
}

std::string edge_list_text(const Graph& g) {
    std::string out;
    for (const auto& [u, v] : g.edges()) {
        out += " " + std::to_string(u) + "-" + std::to_string(v);
    }
    return "n=" + std::to_string(g.vertex_count()) + (out.empty() ? " (no edges)" : out);
}

}  // namespace

long long formula_dim(int n, std::optional<int> h) {
    if (n < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
    if (h) {
        check_height_arg(n, *h);
        return static_cast<long long>(*h) * (n - *h - 1) + 1;
    }
    return s_n_size(n);
}

std::size_t diagram_rank(const std::vector<BettiDiagram>& diagrams) {
    std::map<IndexPair, std::uint32_t> columns;
    for (const auto& b : diagrams) {
        for (const auto& [p, v] : b.entries()) {
            columns.emplace(p, 0);
        }
    }
    std::uint32_t next = 0;
    for (auto& [p, c] : columns) {
        c = next++;
    }
    std::vector<IntRow> rows;
    rows.reserve(diagrams.size());
    for (const auto& b : diagrams) {
        IntRow row;
        for (const auto& [p, v] : b.entries()) {
            row.push_back({columns.at(p), v});
        }
        rows.push_back(std::move(row));
    }
    return rank_rational(std::move(rows));
}

long long hk_subspace_dim(int n, int h) {
    check_height_arg(n, h);
    const IndexSet set = index_set(n, h);
    std::vector<BigRow> rows;
    for (int j = 1; j <= h - 1; ++j) {
        BigRow row;
        for (std::uint32_t c = 0; c < set.size(); ++c) {
            const IndexPair p = set.members()[c];
            BigInt v;
            mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(p.d), static_cast<unsigned long>(j));
            if (p.i % 2 != 0) {
                v = -v;
            }
            row.push_back({c, std::move(v)});
        }
        rows.push_back(std::move(row));
    }
    return static_cast<long long>(set.size()) - static_cast<long long>(rank_rational(std::move(rows)));
}

// ---------------------------------------------------------------------------
// Witness families

Graph witness_graph_cn(IndexPair p) {
    const int extra = p.d - p.i - 2;
    return repeat_edges(make_named(NamedFamily::complete, p.d - 2 * extra), extra);
}

Graph witness_graph_cnh(int h, IndexPair p, std::string* label) {
    const int gap = p.d - p.i;
    if (gap == 2) {
        if (p.d <= h) {
            throw std::invalid_argument(to_string(p) + " lies in the excluded prefix for h=" +
                                        std::to_string(h));
        }
        if (label != nullptr) {
            *label = "(E_" + std::to_string(h) + "+K_" + std::to_string(p.d - h) + ")^c";
        }
        return complement(disjoint_union(Graph(h), make_named(NamedFamily::complete, p.d - h)));
    }
    if (gap == 3 && p.i < h) {
        const int pad = h + 2 - p.d;
        if (pad < 0 || p.d < 3) {
            throw VerificationError("cycle recipe needs 3 <= d <= h+2 at " + to_string(p));
        }
        if (label != nullptr) {
            *label = pad == 0 ? "C_" + std::to_string(p.d) + "^c"
                              : "(C_" + std::to_string(p.d) + "+E_" + std::to_string(pad) + ")^c";
        }
        return complement(disjoint_union(make_named(NamedFamily::cycle, p.d), Graph(pad)));
    }
    if (h < 2 || p.i < 1) {
        throw std::invalid_argument("no witness recipe for " + to_string(p) + " at h=" +
                                    std::to_string(h));
    }
    Graph inner = witness_graph_cnh(h - 1, {p.i - 1, p.d - 2}, label);
    if (label != nullptr) {
        *label += "+L";
    }
    return disjoint_union(inner, make_named(NamedFamily::single_edge, 2));
}

namespace {

ConeReport finish_witness_report(ConeReport report, long long expected, long long upper) {
    std::vector<BettiDiagram> diagrams;
    diagrams.reserve(report.witnesses.size());
    for (const auto& w : report.witnesses) {
        diagrams.push_back(w.diagram);
    }
    const auto rank = static_cast<long long>(diagram_rank(diagrams));
    if (rank != expected) {
        throw VerificationError("witness diagrams have rank " + std::to_string(rank) +
                                ", expected " + std::to_string(expected));
    }
    report.method = ConeMethod::witnesses;
    report.dimension = rank;
    report.upper_bound = upper;
    report.certification = rank == upper ? Certification::certified : Certification::partial;
    return report;
}

}  // namespace

ConeReport witnesses_cn(int n, const ConeOptions& options) {
    if (n < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
    const IndexSet set = index_set(n);
    ConeReport report;
    report.n = n;
    report.field = options.field.label();
    for (IndexPair p : set.members()) {
        Witness w{p, "", witness_graph_cn(p), {}};
        const int extra = p.d - p.i - 2;
        w.label = "K_" + std::to_string(p.d - 2 * extra);
        if (extra == 1) {
            w.label += "+L";
        } else if (extra > 1) {
            w.label += "+" + std::to_string(extra) + "L";
        }
        if (w.graph.vertex_count() != p.d) {
            throw VerificationError("witness " + w.label + " for " + to_string(p) + " has " +
                                    std::to_string(w.graph.vertex_count()) + " vertices");
        }
        w.diagram = diagram_of(w.graph, options);
        w.diagram.set_n_context(n);
        if (!is_initial(w.diagram, p, set)) {
            throw VerificationError("witness " + w.label + " is not " + to_string(p) + "-initial");
        }
        report.witnesses.push_back(std::move(w));
    }
    const long long size = static_cast<long long>(set.size());
    return finish_witness_report(std::move(report), size, size);
}

ConeReport witnesses_cnh(int n, int h, const ConeOptions& options) {
    check_height_arg(n, h);
    const IndexSet set = index_set(n, h);
    ConeReport report;
    report.n = n;
    report.h = h;
    report.field = options.field.label();
    for (IndexPair p : set.members()) {
        if (p.row() == 1 && p.d <= h) {
            continue;
        }
        Witness w{p, "", witness_graph_cnh(h, p, nullptr), {}};
        witness_graph_cnh(h, p, &w.label);
        const int g_height = height(w.graph);
        if (g_height != h) {
            throw VerificationError("witness " + w.label + " for " + to_string(p) + " has height " +
                                    std::to_string(g_height) + ", expected " + std::to_string(h));
        }
        const int bound = std::max(p.d, h + p.d - p.i - 1);
        if (w.graph.vertex_count() > bound || w.graph.vertex_count() > n) {
            throw VerificationError("witness " + w.label + " for " + to_string(p) + " has " +
                                    std::to_string(w.graph.vertex_count()) + " vertices");
        }
        w.diagram = diagram_of(w.graph, options);
        w.diagram.set_n_context(n);
        if (!is_initial(w.diagram, p, set)) {
            throw VerificationError("witness " + w.label + " is not " + to_string(p) +
                                    "-initial under the height-" + std::to_string(h) + " order");
        }
        report.witnesses.push_back(std::move(w));
    }
    const long long expected = formula_dim(n, h);
    if (static_cast<long long>(report.witnesses.size()) != expected) {
        throw VerificationError("built " + std::to_string(report.witnesses.size()) +
                                " witnesses, expected " + std::to_string(expected));
    }
    return finish_witness_report(std::move(report), expected, hk_subspace_dim(n, h));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

constexpr int kMaxEnumerationVertices = 8;
constexpr int kMaxExhaustiveVertices = 7;
constexpr std::uint64_t kBlockSize = std::uint64_t{1} << 14;
constexpr std::uint64_t kScramble = 0x9E3779B97F4A7C15ULL;

using Coords = std::vector<std::int64_t>;

struct CoordsHash {
    std::size_t operator()(const Coords& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (std::int64_t x : v) {
            h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
        }
        return h;
    }
};

std::uint32_t pext_soft(std::uint32_t x, std::uint32_t mask) noexcept {
    std::uint32_t out = 0;
    for (std::uint32_t bit = 1; mask != 0; mask &= mask - 1, bit <<= 1) {
        if (x & mask & (~mask + 1)) {
            out |= bit;
        }
    }
    return out;
}

#ifdef BETTICONE_HAVE_PEXT
__attribute__((target("bmi2"))) std::uint32_t pext_hard(std::uint32_t x, std::uint32_t mask) noexcept {
    return _pext_u32(x, mask);
}
#endif

using PextFn = std::uint32_t (*)(std::uint32_t, std::uint32_t) noexcept;

PextFn select_pext() {
#ifdef BETTICONE_HAVE_PEXT
    if (__builtin_cpu_supports("bmi2")) {
        return &pext_hard;
    }
#endif
    return &pext_soft;
}

// Evaluates the Hochster sum for graphs on [n], n <= 8, given by edge masks.
class Sweeper {
public:
    Sweeper(int n, const FieldSpec& field)
        : n_(n), field_(field), tables_(detail::ProfileTables::get(field)), pext_(select_pext()),
          coords_(index_set(n)) {
        const VertexMask full = (VertexMask{1} << n) - 1;
        for (VertexMask u = 1; u <= full; ++u) {
            const int k = std::popcount(u);
            if (k < 2) {
                continue;
            }
            if (k > detail::kTableVertices) {
                large_.push_back(u);
                continue;
            }
            std::uint32_t pairs = 0;
            for (int b = 1; b < n; ++b) {
                for (int a = 0; a < b; ++a) {
                    if ((u >> a & 1U) && (u >> b & 1U)) {
                        pairs |= std::uint32_t{1} << (b * (b - 1) / 2 + a);
                    }
                }
            }
            subsets_.push_back({pairs, k});
        }
        column_.assign(static_cast<std::size_t>((n + 1) * (n + 1)), -1);
        for (std::size_t c = 0; c < coords_.size(); ++c) {
            const IndexPair p = coords_.members()[c];
            column_[static_cast<std::size_t>(p.d * (n + 1) + p.i)] = static_cast<int>(c);
        }
    }

    std::size_t dimension() const noexcept { return coords_.size(); }

    // Fills `out` with β(G) in S_n coordinates and returns the height of G.
    // Throws VerificationError if β(G) leaves S_n^{height}, or an HK
    // functional that must vanish does not.
    int evaluate(std::uint32_t edge_mask, Coords& out) const {
        std::array<std::array<std::int64_t, kMaxEnumerationVertices + 2>,
                   kMaxEnumerationVertices + 1>
            cells{};
        for (const auto& s : subsets_) {
            const auto& p = tables_.lookup(s.size, pext_(edge_mask, s.pairs));
            if (!p.zero) {
                for (int t = 0; t <= s.size; ++t) {
                    cells[s.size][t] += p.dims[t];
                }
            }
        }
        const Graph g = Graph::from_edge_mask(n_, edge_mask);
        for (VertexMask u : large_) {
            if (detail::has_isolated_in(g, u)) {
                continue;
            }
            const int k = std::popcount(u);
            const HomologyProfile h = reduced_homology_dims(independence_complex(g, u), field_);
            for (int t = 0; t < static_cast<int>(h.dims.size()); ++t) {
                cells[k][t] += h.dims[t];
            }
        }
        const int g_height = height(g);
        const int max_gap = std::min(g_height, n_ - g_height) + 1;
        out.assign(coords_.size(), 0);
        std::array<std::int64_t, kMaxEnumerationVertices + 1> hk{};
        for (int d = 2; d <= n_; ++d) {
            for (int t = 0; t <= d; ++t) {
                const std::int64_t v = cells[d][t];
                const int i = d - t - 1;
                if (v == 0 || i < 0) {
                    continue;
                }
                const int col = column_[static_cast<std::size_t>(d * (n_ + 1) + i)];
                if (col < 0 || d - i > max_gap) {
                    fail(g, "diagram entry (" + std::to_string(i) + "," + std::to_string(d) +
                                ") outside the support pattern for height " +
                                std::to_string(g_height));
                }
                out[static_cast<std::size_t>(col)] = v;
                std::int64_t power = 1;
                for (int j = 0; j < g_height; ++j) {
                    hk[j] += (i % 2 == 0 ? v : -v) * power;
                    power *= d;
                }
            }
        }
        for (int j = 1; j < g_height; ++j) {
            if (hk[j] != 0) {
                fail(g, "HK_" + std::to_string(j) + " does not vanish at height " +
                            std::to_string(g_height));
            }
        }
        return g_height;
    }

    IntRow to_row(const Coords& v) const {
        IntRow row;
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (v[c] != 0) {
                row.push_back({static_cast<std::uint32_t>(c), v[c]});
            }
        }
        return row;
    }

private:
    struct Subset {
        std::uint32_t pairs;
        int size;
    };

    [[noreturn]] static void fail(const Graph& g, const std::string& what) {
        throw VerificationError(what + " for graph " + edge_list_text(g));
    }

    int n_;
    FieldSpec field_;
    const detail::ProfileTables& tables_;
    PextFn pext_;
    IndexSet coords_;
    std::vector<Subset> subsets_;
    std::vector<VertexMask> large_;
    std::vector<int> column_;
};

struct WorkerState {
    std::uint64_t in_cone = 0;
    std::vector<Coords> candidates;
    std::unordered_set<Coords, CoordsHash> distinct;
};

}  // namespace

ConeReport enumerate_cone_dim(int n, std::optional<int> h, bool dedupe, bool early_stop,
                              const ConeOptions& options) {
    if (n < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
    if (n > kMaxEnumerationVertices) {
        throw CapacityError("enumeration is limited to n <= " +
                            std::to_string(kMaxEnumerationVertices) +
                            "; use --method witnesses for larger n");
    }
    if (n > kMaxExhaustiveVertices && !early_stop) {
        throw CapacityError("exhaustive enumeration is limited to n <= " +
                            std::to_string(kMaxExhaustiveVertices) +
                            "; pass --early-stop or use --method witnesses");
    }
    if (h && (*h < 0 || *h > n - 1)) {
        throw std::invalid_argument("height must lie in 0.." + std::to_string(n - 1));
    }
    const auto started = std::chrono::steady_clock::now();
    const Sweeper sweeper(n, options.field);
    const long long upper = h ? (*h == 0 ? 0 : hk_subspace_dim(n, *h))
                              : static_cast<long long>(sweeper.dimension());
    const int pair_count = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pair_count;
    const unsigned workers = std::max(1U, options.workers);

    RationalBasis basis;
    std::unordered_set<Coords, CoordsHash> seen;
    EnumerationStats stats;
    if (dedupe) {
        stats.distinct_diagrams = 0;
    }
    std::vector<WorkerState> states(workers);

    for (std::uint64_t start = 0; start < total; start += kBlockSize) {
        const std::uint64_t count = std::min(kBlockSize, total - start);
        const bool want_rank = static_cast<long long>(basis.rank()) < upper;
        detail::parallel_slices(workers, count, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
            WorkerState& state = states[w];
            RationalBasis local;
            Coords v;
            for (std::uint64_t k = b; k < e; ++k) {
                const std::uint64_t index = start + k;
                const auto mask = static_cast<std::uint32_t>(
                    early_stop ? (index * kScramble) & (total - 1) : index);
                const int g_height = sweeper.evaluate(mask, v);
                if (h && g_height != *h) {
                    continue;
                }
                ++state.in_cone;
                if (dedupe) {
                    state.distinct.insert(v);
                } else if (want_rank && local.insert(sweeper.to_row(v))) {
                    state.candidates.push_back(v);
                }
            }
        });
        for (auto& state : states) {
            stats.graphs_in_cone += state.in_cone;
            state.in_cone = 0;
            for (auto& v : state.candidates) {
                basis.insert(sweeper.to_row(v));
            }
            state.candidates.clear();
            for (const auto& v : state.distinct) {
                if (seen.insert(v).second) {
                    basis.insert(sweeper.to_row(v));
                }
            }
            state.distinct.clear();
        }
        stats.graphs_visited += count;
        if (early_stop && static_cast<long long>(basis.rank()) >= upper) {
            stats.stopped_early = stats.graphs_visited < total;
            break;
        }
    }
    if (dedupe) {
        stats.distinct_diagrams = seen.size();
    }
    stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    ConeReport report;
    report.n = n;
    report.h = h;
    report.method = ConeMethod::enumeration;
    report.field = options.field.label();
    report.dimension = static_cast<long long>(basis.rank());
    report.upper_bound = upper;
    report.certification =
        report.dimension == upper ? Certification::certified : Certification::partial;
    report.stats = stats;
    return report;
}

ConeReport cone_dim(ConeMethod method, int n, std::optional<int> h, bool dedupe, bool early_stop,
                    const ConeOptions& options) {
    switch (method) {
        case ConeMethod::witnesses:
            return h ? witnesses_cnh(n, *h, options) : witnesses_cn(n, options);
        case ConeMethod::enumeration:
            return enumerate_cone_dim(n, h, dedupe, early_stop, options);
        case ConeMethod::hk_subspace: {
            if (!h) {
                throw std::invalid_argument("the hk-subspace method needs a height");
            }
            ConeReport report;
            report.n = n;
            report.h = h;
            report.method = method;
            report.field = options.field.label();
            report.dimension = hk_subspace_dim(n, *h);
            return report;
        }
        case ConeMethod::formula:
            break;
    }
    ConeReport report;
    report.n = n;
    report.h = h;
    report.method = ConeMethod::formula;
    report.field = options.field.label();
    report.dimension = formula_dim(n, h);
    return report;
}

}  // namespace betticone
