#pragma once

// Internal machinery shared by hochster_diagram and the cone enumerator.

#include "betticone/diagram.hpp"
#include "betticone/field.hpp"
#include "betticone/graph.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace betticone::detail {

inline constexpr int kTableVertices = 6;

/// dims[j + 1] = dim H̃_j(Ind(G)), j = -1..5, for a graph on at most 6 vertices.
struct SmallProfile {
    std::array<std::uint8_t, kTableVertices + 1> dims{};
    bool zero = true;
};

/// Homology of Ind(G) for every labelled G on k <= 6 vertices, indexed by the
/// graph6-order edge mask. Built once per field on first use.
class ProfileTables {
public:
    static const ProfileTables& get(const FieldSpec& field);

    const SmallProfile& lookup(int k, std::uint32_t edge_mask) const noexcept {
        return tables_[k][edge_mask];
    }

private:
    explicit ProfileTables(const FieldSpec& field);
    std::array<std::vector<SmallProfile>, kTableVertices + 1> tables_;
};

/// Cell (d, j + 1) holds Σ_{|U| = d} dim H̃_j(Δ_U).
class DenseBetti {
public:
    explicit DenseBetti(int n) : n_(n), cells_(static_cast<std::size_t>(n + 1) * (n + 2), 0) {}

    void add(int d, int j, std::int64_t v) noexcept { cells_[index(d, j)] += v; }
    std::int64_t get(int d, int j) const noexcept { return cells_[index(d, j)]; }
    void merge(const DenseBetti& other) noexcept;
    int n() const noexcept { return n_; }

    BettiDiagram to_diagram() const;

private:
    std::size_t index(int d, int j) const noexcept {
        return static_cast<std::size_t>(d) * static_cast<std::size_t>(n_ + 2) +
               static_cast<std::size_t>(j + 1);
    }
    int n_;
    std::vector<std::int64_t> cells_;
};

/// Edge mask of g[u] relabelled 0..|u|-1, graph6 order.
std::uint32_t induced_edge_mask(const Graph& g, VertexMask u) noexcept;

/// True iff some vertex of u has no neighbour inside u.
inline bool has_isolated_in(const Graph& g, VertexMask u) noexcept {
    for (VertexMask rest = u; rest != 0; rest &= rest - 1) {
        if ((g.neighbors(__builtin_ctz(rest)) & u) == 0) {
            return true;
        }
    }
    return false;
}

/// Adds the homology profile of Δ(g)_u to acc.
void accumulate_subset(const Graph& g, VertexMask u, const FieldSpec& field,
                       const ProfileTables& tables, bool skip_cones, DenseBetti& acc);

}  // namespace betticone::detail
