#pragma once

// Betti diagrams of edge ideals: the Hochster sum, closed forms, transfer
// rules, Herzog–Kühl functionals and support checks.

#include "betticone/bigint.hpp"
#include "betticone/diagram.hpp"
#include "betticone/field.hpp"
#include "betticone/graph.hpp"

#include <vector>

namespace betticone {

inline constexpr int kMaxHochsterVertices = 16;

struct HochsterOptions {
    FieldSpec field = FieldSpec::rationals();
    unsigned workers = 1;
    /// Skip subsets U where G[U] has an isolated vertex (Δ_U is then a cone).
    bool skip_cones = true;
};

/// β_{i,d}(I(g)) = Σ_{|U|=d} dim H̃_{d-i-2}(Δ(g)_U). n_context = g.vertex_count().
/// Throws CapacityError above 16 vertices.
BettiDiagram hochster_diagram(const Graph& g, const HochsterOptions& options = {});
BettiDiagram hochster_diagram(const Graph& g, const FieldSpec& field);

/// β(K_m): β_{i,i+2} = (i+1) C(m, i+2).
BettiDiagram diagram_complete(int m);

/// β(C_m^c) for m >= 4. Throws std::invalid_argument for m < 4.
BettiDiagram diagram_cycle_complement(int m);

namespace detail {
/// The closed form evaluated verbatim, for any m >= 3.
BettiDiagram cycle_complement_literal(int m);
}  // namespace detail

/// β(G + L) from β(G): b_{i,d} + b_{i-1,d-2} with b_{-1,0} = 1.
BettiDiagram suspend_diagram(const BettiDiagram& b);

struct PaddedDiagram {
    /// Rows d - i >= 3 of β^c(G + E_{m-l}) within S_m.
    BettiDiagram upper_rows;
    /// Row-1 positions (i, i+2), i = 0..m-2, all nonzero; values not determined.
    std::vector<IndexPair> row1_support;
};

/// b = β(G^c) for G on l vertices, l < m. Rows d - i >= 3 are
/// Σ_{j=0..i} C(m-l, i-j) β_{j, j+d-i}. Throws std::invalid_argument if l >= m.
PaddedDiagram pad_complement_diagram(const BettiDiagram& b, int l, int m);

/// β^c(G + E_{m-l}) in full: upper rows from the padding rule, row 1 from
/// the Hochster sum of (G + E_{m-l})^c.
BettiDiagram pad_complement_diagram_full(const Graph& g, int m,
                                         const FieldSpec& field = FieldSpec::rationals());

/// Σ (-1)^i d^j β_{i,d}. Throws std::invalid_argument for j < 0.
BigInt hk_functional(const BettiDiagram& b, int j);

/// HK_0 .. HK_max_j.
std::vector<BigInt> hk_vector(const BettiDiagram& b, int max_j);

/// max(d - i) over the support. Throws UndefinedValueError when empty.
int regularity(const BettiDiagram& b);

/// Every support cell has i + 2 <= d <= min(2i + 2, n).
bool check_support_cn(const BettiDiagram& b, int n) noexcept;

/// check_support_cn and d - i <= min(h, n - h) + 1.
bool check_support_cnh(const BettiDiagram& b, int n, int h) noexcept;

}  // namespace betticone
