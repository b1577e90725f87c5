#pragma once

// Labelled simple graphs on at most 32 vertices.
//
// Vertex labels are 1-based (1..n) wherever they appear as numbers: edge
// lists, text formats, from_edges(). Bitmasks are 0-based: bit k stands for
// vertex k+1. Internally every algorithm works on 0-based indices.

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace betticone {

using VertexMask = std::uint32_t;

inline constexpr int kMaxGraphVertices = 32;

class Graph {
public:
    /// Edgeless graph E_n.
    explicit Graph(int n = 0);

    /// Graph on labels 1..n with the given 1-based edges.
    /// Throws std::invalid_argument on loops or out-of-range labels.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    /// Bit k of `mask` is the k-th vertex pair in graph6 order: (0,1), (0,2),
    /// (1,2), (0,3), ... i.e. pair (i,j), i<j, sits at bit j*(j-1)/2 + i.
    static Graph from_edge_mask(int n, std::uint64_t mask);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept;

    /// Neighbours of the 0-based vertex `index`.
    VertexMask neighbors(int index) const noexcept { return adj_[index]; }

    /// 1-based labels.
    bool has_edge(int u, int v) const noexcept;

    /// Mask with one bit per vertex.
    VertexMask vertex_mask() const noexcept {
        return n_ == 32 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
    }

    /// Edges as 1-based pairs (u<v), sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    /// Inverse of from_edge_mask; requires n <= 11 so the mask fits 64 bits.
    std::uint64_t edge_mask() const;

    /// Subgraph induced on `subset`, relabelled 1..|subset| in order.
    Graph induced(VertexMask subset) const;

    /// Set of isolated vertices.
    VertexMask isolated_vertices() const noexcept;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::array<VertexMask, kMaxGraphVertices> adj_{};
};

enum class NamedFamily { complete, empty, cycle, single_edge };

/// K_m, E_m, C_m (m >= 3) or L. single_edge ignores m.
Graph make_named(NamedFamily family, int m);

Graph complement(const Graph& g);

/// Labels of h are shifted up by g.vertex_count(). Throws CapacityError above
/// 32 vertices.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Induced subgraph on the non-isolated vertices, labels kept in order.
Graph strip_isolated(const Graph& g);

enum class GraphFormat { edge_list, graph6 };

/// Throws ParseError with the byte offset of the offending token.
Graph parse_graph(std::string_view text, GraphFormat format);

std::string serialize_graph(const Graph& g, GraphFormat format);

/// Minimum vertex cover size (the height of the edge ideal).
int height(const Graph& g);

/// Minimum size over all inclusion-maximal matchings.
int min_maximal_matching_size(const Graph& g);

/// True iff `cover` meets every edge.
bool is_vertex_cover(const Graph& g, VertexMask cover) noexcept;

/// True iff no edge has both ends in `set`.
inline bool is_independent(const Graph& g, VertexMask set) noexcept {
    for (VertexMask rest = set; rest != 0; rest &= rest - 1) {
        if (g.neighbors(std::countr_zero(rest)) & set) {
            return false;
        }
    }
    return true;
}

}  // namespace betticone
