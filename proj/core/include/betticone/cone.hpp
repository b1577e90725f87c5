#pragma once

// Dimensions of the Betti cones C_n and C_n^h: closed formulas, witness
// families, the Herzog–Kühl upper bound and exhaustive enumeration.

#include "betticone/diagram.hpp"
#include "betticone/field.hpp"
#include "betticone/graph.hpp"
#include "betticone/index_set.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace betticone {

enum class ConeMethod { formula, witnesses, enumeration, hk_subspace };

/// "formula", "witnesses", "enumerate", "hk-subspace".
std::string to_string(ConeMethod method);

/// Accepts the names above ("enumeration" too). Throws std::invalid_argument.
ConeMethod parse_cone_method(const std::string& text);

/// certified: the dimension found equals an independently computed upper
/// bound. partial: it does not (e.g. an early-stopped run that fell short).
enum class Certification { certified, partial, not_applicable };

std::string to_string(Certification c);

struct Witness {
    IndexPair position;
    std::string label;
    Graph graph;
    BettiDiagram diagram;
};

struct EnumerationStats {
    std::uint64_t graphs_visited = 0;
    /// Graphs of the requested height (all visited graphs when h is absent).
    std::uint64_t graphs_in_cone = 0;
    /// Distinct diagrams among graphs_in_cone; only tracked with dedupe.
    std::optional<std::uint64_t> distinct_diagrams;
    bool stopped_early = false;
    double elapsed_seconds = 0.0;
};

struct ConeReport {
    int n = 0;
    std::optional<int> h;
    ConeMethod method = ConeMethod::formula;
    long long dimension = 0;
    std::optional<long long> upper_bound;
    Certification certification = Certification::not_applicable;
    std::string field = "Q";
    std::vector<Witness> witnesses;
    std::optional<EnumerationStats> stats;
};

/// Hochster diagrams keyed by graph6 string and field. Thread safe.
class DiagramCache {
public:
    BettiDiagram get(const Graph& g, const FieldSpec& field);
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::map<std::string, BettiDiagram> entries_;
};

struct ConeOptions {
    FieldSpec field = FieldSpec::rationals();
    unsigned workers = 1;
    /// Optional; witness builders reuse diagrams across calls through it.
    DiagramCache* cache = nullptr;
};

/// r^2 (n = 2r) or r^2 + r (n = 2r + 1); with h, h(n - h - 1) + 1.
/// Throws std::invalid_argument for n < 1 or h outside 1..n-1.
long long formula_dim(int n, std::optional<int> h = std::nullopt);

/// Rank over Q of the diagrams as vectors indexed by (i, d).
std::size_t diagram_rank(const std::vector<BettiDiagram>& diagrams);

/// |S_n^h| minus the rank of the (h-1) x |S_n^h| matrix ((-1)^i d^j).
/// Throws std::invalid_argument unless 1 <= h <= n-1.
long long hk_subspace_dim(int n, int h);

/// G_{i,d} = K_{d-2(ρ-1)} + (ρ-1)L for ρ = d - i - 1.
Graph witness_graph_cn(IndexPair p);

/// G^h_{i,d}: (E_h + K_{d-h})^c in row 1, (C_d + E_{h+2-d})^c in row 2 with
/// i < h, otherwise G^{h-1}_{i-1,d-2} + L. `label` receives the construction.
Graph witness_graph_cnh(int h, IndexPair p, std::string* label = nullptr);

/// One witness per position of S_n, each verified (i,d)-initial under ≺ with
/// exactly d vertices, and the set verified to have rank |S_n|.
/// Throws VerificationError if any check fails.
ConeReport witnesses_cn(int n, const ConeOptions& options = {});

/// One witness per position of S_n^h - {(0,2), ..., (h-2,h)}, each verified
/// to have height h, at most max(d, h+d-i-1) vertices and to be
/// (i,d)-initial under ≺_h; the set is verified to have rank h(n-h-1)+1.
ConeReport witnesses_cnh(int n, int h, const ConeOptions& options = {});

/// Exact rank of the span of β(G) over all labelled graphs on [n] (of height
/// h when given). Every visited diagram is checked against the support
/// pattern and the HK equations of its own height; a failure throws
/// VerificationError naming the graph. early_stop halts as soon as the rank
/// reaches the upper bound and visits graphs in a scrambled order.
/// n > 7 without early_stop, or n > 8, throws CapacityError.
ConeReport enumerate_cone_dim(int n, std::optional<int> h, bool dedupe, bool early_stop,
                              const ConeOptions& options = {});

/// Dispatch on method. dedupe and early_stop only affect enumeration.
ConeReport cone_dim(ConeMethod method, int n, std::optional<int> h, bool dedupe = false,
                    bool early_stop = false, const ConeOptions& options = {});

}  // namespace betticone
