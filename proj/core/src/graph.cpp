#include "betticone/graph.hpp"

#include "betticone/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace betticone {

namespace {

constexpr int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

void check_size(int n) {
    if (n < 0) {
        throw std::invalid_argument("vertex count must be non-negative");
    }
    if (n > kMaxGraphVertices) {
        throw CapacityError("graph has " + std::to_string(n) + " vertices; the cap is " +
                            std::to_string(kMaxGraphVertices));
    }
}

// Compress the bits of `value` selected by `select` into the low bits.
VertexMask extract_bits(VertexMask value, VertexMask select) {
    VertexMask out = 0;
    int k = 0;
    for (VertexMask rest = select; rest != 0; rest &= rest - 1, ++k) {
        if (value & (rest & -rest)) {
            out |= VertexMask{1} << k;
        }
    }
    return out;
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_size(n); }

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 1 || v < 1 || u > n || v > n) {
            throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} outside 1.." + std::to_string(n));
        }
        if (u == v) {
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        }
        g.adj_[u - 1] |= VertexMask{1} << (v - 1);
        g.adj_[v - 1] |= VertexMask{1} << (u - 1);
    }
    return g;
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            const int bit = pair_bit(i, j);
            if (bit < 64 && ((mask >> bit) & 1U)) {
                g.adj_[i] |= VertexMask{1} << j;
                g.adj_[j] |= VertexMask{1} << i;
            }
        }
    }
    return g;
}

int Graph::edge_count() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v) {
        twice += std::popcount(adj_[v]);
    }
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const noexcept {
    if (u < 1 || v < 1 || u > n_ || v > n_) {
        return false;
    }
    return (adj_[u - 1] >> (v - 1)) & 1U;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if ((adj_[u] >> v) & 1U) {
                out.emplace_back(u + 1, v + 1);
            }
        }
    }
    return out;
}

std::uint64_t Graph::edge_mask() const {
    if (n_ > 11) {
        throw CapacityError("edge mask needs at most 11 vertices");
    }
    std::uint64_t mask = 0;
    for (int j = 1; j < n_; ++j) {
        for (int i = 0; i < j; ++i) {
            if ((adj_[i] >> j) & 1U) {
                mask |= std::uint64_t{1} << pair_bit(i, j);
            }
        }
    }
    return mask;
}

Graph Graph::induced(VertexMask subset) const {
    subset &= vertex_mask();
    Graph g(std::popcount(subset));
    int k = 0;
    for (VertexMask rest = subset; rest != 0; rest &= rest - 1, ++k) {
        g.adj_[k] = extract_bits(adj_[std::countr_zero(rest)], subset);
    }
    return g;
}

VertexMask Graph::isolated_vertices() const noexcept {
    VertexMask out = 0;
    for (int v = 0; v < n_; ++v) {
        if (adj_[v] == 0) {
            out |= VertexMask{1} << v;
        }
    }
    return out;
}

Graph make_named(NamedFamily family, int m) {
    if (family != NamedFamily::single_edge && m < 0) {
        throw std::invalid_argument("family size must be non-negative");
    }
    std::vector<std::pair<int, int>> edges;
    switch (family) {
    case NamedFamily::complete:
        for (int u = 1; u <= m; ++u) {
            for (int v = u + 1; v <= m; ++v) {
                edges.emplace_back(u, v);
            }
        }
        return Graph::from_edges(m, edges);
    case NamedFamily::empty:
        return Graph(m);
    case NamedFamily::cycle:
        if (m < 3) {
            throw std::invalid_argument("cycle needs at least 3 vertices, got " + std::to_string(m));
        }
        for (int u = 1; u < m; ++u) {
            edges.emplace_back(u, u + 1);
        }
        edges.emplace_back(m, 1);
        return Graph::from_edges(m, edges);
    case NamedFamily::single_edge:
        return Graph::from_edges(2, {{1, 2}});
    }
    throw std::invalid_argument("unknown graph family");
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= g.vertex_count(); ++u) {
        for (int v = u + 1; v <= g.vertex_count(); ++v) {
            if (!g.has_edge(u, v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(g.vertex_count(), edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.vertex_count() + h.vertex_count();
    if (n > kMaxGraphVertices) {
        throw CapacityError("disjoint union has " + std::to_string(n) + " vertices; the cap is " +
                            std::to_string(kMaxGraphVertices));
    }
    auto edges = g.edges();
    for (auto [u, v] : h.edges()) {
        edges.emplace_back(u + g.vertex_count(), v + g.vertex_count());
    }
    return Graph::from_edges(n, edges);
}

Graph strip_isolated(const Graph& g) {
    return g.induced(g.vertex_mask() & ~g.isolated_vertices());
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

struct Token {
    std::string_view text;
    std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        const std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos > start) {
            tokens.push_back({text.substr(start, pos - start), start});
        }
    }
    return tokens;
}

int parse_int(const Token& token) {
    int value = 0;
    const char* first = token.text.data();
    const char* last = first + token.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value < 0) {
        throw ParseError("malformed token '" + std::string(token.text) + "'", token.offset);
    }
    return value;
}

Graph parse_edge_list(std::string_view text) {
    const auto tokens = tokenize(text);
    if (tokens.empty()) {
        throw ParseError("missing vertex count", 0);
    }
    const int n = parse_int(tokens[0]);
    if (n > kMaxGraphVertices) {
        throw CapacityError("graph has " + std::to_string(n) + " vertices; the cap is " +
                            std::to_string(kMaxGraphVertices));
    }
    if ((tokens.size() - 1) % 2 != 0) {
        throw ParseError("edge with a single endpoint", tokens.back().offset);
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t t = 1; t < tokens.size(); t += 2) {
        const int u = parse_int(tokens[t]);
        const int v = parse_int(tokens[t + 1]);
        for (std::size_t k : {t, t + 1}) {
            const int label = k == t ? u : v;
            if (label < 1 || label > n) {
                throw ParseError("vertex " + std::to_string(label) + " outside 1.." +
                                     std::to_string(n),
                                 tokens[k].offset);
            }
        }
        if (u == v) {
            throw ParseError("loop at vertex " + std::to_string(u), tokens[t].offset);
        }
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

constexpr std::string_view kGraph6Header = ">>graph6<<";

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
        pos = kGraph6Header.size();
    }
    std::size_t end = text.size();
    while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
        --end;
    }
    if (pos >= end) {
        throw ParseError("empty graph6 string", pos);
    }
    auto sextet = [&](std::size_t at) {
        const auto c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126) {
            throw ParseError("byte outside the graph6 range 63..126", at);
        }
        return static_cast<unsigned>(c - 63);
    };
    if (text[pos] == '~') {
        throw CapacityError("graph6 string encodes at least 63 vertices; the cap is " +
                            std::to_string(kMaxGraphVertices));
    }
    const int n = static_cast<int>(sextet(pos));
    if (n > kMaxGraphVertices) {
        throw CapacityError("graph has " + std::to_string(n) + " vertices; the cap is " +
                            std::to_string(kMaxGraphVertices));
    }
    ++pos;
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (end - pos != bytes) {
        throw ParseError("expected " + std::to_string(bytes) + " data bytes for n=" +
                             std::to_string(n) + ", found " + std::to_string(end - pos),
                         end - pos < bytes ? end : pos + bytes);
    }
    std::vector<std::pair<int, int>> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const unsigned chunk = sextet(pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1U) {
                edges.emplace_back(i + 1, j + 1);
            }
        }
    }
    if (k % 6 != 0 && (sextet(pos + k / 6) & ((1U << (6 - k % 6)) - 1)) != 0) {
        throw ParseError("non-zero graph6 padding bits", pos + k / 6);
    }
    return Graph::from_edges(n, edges);
}

std::string serialize_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out(1, static_cast<char>(63 + n));
    unsigned chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | ((g.neighbors(i) >> j) & 1U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
    }
    return out;
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    if (format == GraphFormat::graph6) {
        return serialize_graph6(g);
    }
    std::string out = std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Combinatorial solvers

bool is_vertex_cover(const Graph& g, VertexMask cover) noexcept {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!((cover >> v) & 1U) && (g.neighbors(v) & ~cover) != 0) {
            return false;
        }
    }
    return true;
}

int height(const Graph& g) {
    // Only non-isolated vertices can belong to a minimum cover, and any
    // matching is a lower bound, so the search starts at a greedy matching.
    std::vector<int> candidates;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.neighbors(v) != 0) {
            candidates.push_back(v);
        }
    }
    int lower = 0;
    VertexMask used = 0;
    for (int v : candidates) {
        if ((used >> v) & 1U) {
            continue;
        }
        const VertexMask free = g.neighbors(v) & ~used;
        if (free != 0) {
            used |= (VertexMask{1} << v) | (free & -free);
            ++lower;
        }
    }

    const int m = static_cast<int>(candidates.size());
    for (int k = lower; k <= m; ++k) {
        if (k == 0) {
            if (is_vertex_cover(g, 0)) {
                return 0;
            }
            continue;
        }
        // Gosper's hack over k-subsets of the candidate list.
        std::uint64_t pick = (std::uint64_t{1} << k) - 1;
        const std::uint64_t limit = std::uint64_t{1} << m;
        while (pick < limit) {
            VertexMask cover = 0;
            for (std::uint64_t rest = pick; rest != 0; rest &= rest - 1) {
                cover |= VertexMask{1} << candidates[std::countr_zero(rest)];
            }
            if (is_vertex_cover(g, cover)) {
                return k;
            }
            const std::uint64_t low = pick & -pick;
            const std::uint64_t ripple = pick + low;
            pick = (((ripple ^ pick) >> 2) / low) | ripple;
        }
    }
    return m;
}

namespace {

// Some maximal matching extending the current one has to match one endpoint
// of any edge whose endpoints are both still free; branch on those choices.
void min_maximal_search(const Graph& g, VertexMask matched, int size, int& best) {
    if (size >= best) {
        return;
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        if ((matched >> u) & 1U) {
            continue;
        }
        const VertexMask free_nbrs = g.neighbors(u) & ~matched;
        if (free_nbrs == 0) {
            continue;
        }
        const int w = std::countr_zero(free_nbrs);
        for (VertexMask rest = free_nbrs; rest != 0; rest &= rest - 1) {
            const int x = std::countr_zero(rest);
            min_maximal_search(g, matched | (VertexMask{1} << u) | (VertexMask{1} << x), size + 1,
                               best);
        }
        const VertexMask w_nbrs = g.neighbors(w) & ~matched & ~(VertexMask{1} << u);
        for (VertexMask rest = w_nbrs; rest != 0; rest &= rest - 1) {
            const int y = std::countr_zero(rest);
            min_maximal_search(g, matched | (VertexMask{1} << w) | (VertexMask{1} << y), size + 1,
                               best);
        }
        return;
    }
    best = size;
}

}  // namespace

int min_maximal_matching_size(const Graph& g) {
    int best = g.vertex_count() / 2 + 1;
    min_maximal_search(g, 0, 0, best);
    return best;
}

}  // namespace betticone
