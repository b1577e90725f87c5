#include "hochster_kernel.hpp"

#include "betticone/homology.hpp"
#include "betticone/simplicial_complex.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>

namespace betticone::detail {

ProfileTables::ProfileTables(const FieldSpec& field) {
    for (int k = 0; k <= kTableVertices; ++k) {
        const std::uint32_t count = std::uint32_t{1} << (k * (k - 1) / 2);
        auto& table = tables_[k];
        table.resize(count);
        for (std::uint32_t mask = 0; mask < count; ++mask) {
            const Graph g = Graph::from_edge_mask(k, mask);
            if (k > 0 && g.isolated_vertices() != 0) {
                continue;
            }
            const HomologyProfile h = reduced_homology_dims(independence_complex(g), field);
            SmallProfile& p = table[mask];
            for (std::size_t t = 0; t < h.dims.size() && t < p.dims.size(); ++t) {
                p.dims[t] = static_cast<std::uint8_t>(h.dims[t]);
                p.zero = p.zero && h.dims[t] == 0;
            }
        }
    }
}

const ProfileTables& ProfileTables::get(const FieldSpec& field) {
    static std::mutex mutex;
    static std::map<std::uint32_t, std::unique_ptr<ProfileTables>> cache;
    const std::uint32_t key = field.is_rational() ? 0 : field.characteristic();
    std::lock_guard lock(mutex);
    auto& slot = cache[key];
    if (!slot) {
        slot.reset(new ProfileTables(field));
    }
    return *slot;
}

void DenseBetti::merge(const DenseBetti& other) noexcept {
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        cells_[k] += other.cells_[k];
    }
}

BettiDiagram DenseBetti::to_diagram() const {
    BettiDiagram out(n_);
    for (int d = 0; d <= n_; ++d) {
        for (int j = -1; j <= n_; ++j) {
            const int i = d - j - 2;
            if (i >= 0) {
                if (const std::int64_t v = get(d, j); v != 0) {
                    out.set({i, d}, v);
                }
            }
        }
    }
    return out;
}

std::uint32_t induced_edge_mask(const Graph& g, VertexMask u) noexcept {
    std::array<int, kMaxGraphVertices> position{};
    std::uint32_t out = 0;
    int p = 0;
    for (VertexMask rest = u; rest != 0; rest &= rest - 1, ++p) {
        const int v = std::countr_zero(rest);
        position[v] = p;
        const VertexMask earlier = g.neighbors(v) & u & ((VertexMask{1} << v) - 1);
        for (VertexMask w = earlier; w != 0; w &= w - 1) {
            out |= std::uint32_t{1} << (p * (p - 1) / 2 + position[std::countr_zero(w)]);
        }
    }
    return out;
}

void accumulate_subset(const Graph& g, VertexMask u, const FieldSpec& field,
                       const ProfileTables& tables, bool skip_cones, DenseBetti& acc) {
    const int d = std::popcount(u);
    if (skip_cones && has_isolated_in(g, u)) {
        return;
    }
    if (d <= kTableVertices) {
        const SmallProfile& p = tables.lookup(d, induced_edge_mask(g, u));
        if (!p.zero) {
            for (int t = 0; t <= d; ++t) {
                if (p.dims[t] != 0) {
                    acc.add(d, t - 1, p.dims[t]);
                }
            }
        }
        return;
    }
    const HomologyProfile h = reduced_homology_dims(independence_complex(g, u), field);
    for (int t = 0; t < static_cast<int>(h.dims.size()); ++t) {
        if (h.dims[t] != 0) {
            acc.add(d, t - 1, h.dims[t]);
        }
    }
}

}  // namespace betticone::detail
