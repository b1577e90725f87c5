#include "betticone/homology.hpp"

#include "betticone/linalg.hpp"

#include <algorithm>
#include <bit>

namespace betticone {

bool HomologyProfile::is_zero() const noexcept {
    return std::all_of(dims.begin(), dims.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t HomologyProfile::euler_characteristic() const noexcept {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        // k = j + 1
        chi += (k % 2 == 1) ? dims[k] : -dims[k];
    }
    return chi;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& c, VertexMask u) {
    std::vector<std::vector<VertexMask>> by_size;
    for (int k = 0;; ++k) {
        const auto level = c.faces_of_size(k);
        std::vector<VertexMask> kept;
        for (VertexMask f : level) {
            if ((f & ~u) == 0) {
                kept.push_back(f);
            }
        }
        if (kept.empty()) {
            break;
        }
        by_size.push_back(std::move(kept));
    }
    return SimplicialComplex(c.ground_size(), std::move(by_size));
}

std::size_t boundary_rank(const SimplicialComplex& c, int k, const FieldSpec& field) {
    const auto hi = c.faces_of_size(k);
    const auto lo = c.faces_of_size(k - 1);
    if (k < 1 || hi.empty() || lo.empty()) {
        return 0;
    }
    if (k == 1) {
        return 1;
    }
    std::vector<IntRow> rows;
    rows.reserve(hi.size());
    for (VertexMask face : hi) {
        IntRow row;
        row.reserve(static_cast<std::size_t>(k));
        int pos = 0;
        for (VertexMask rest = face; rest != 0; rest &= rest - 1, ++pos) {
            const VertexMask sub = face & ~(rest & -rest);
            const auto col = static_cast<std::uint32_t>(
                std::lower_bound(lo.begin(), lo.end(), sub) - lo.begin());
            row.push_back({col, pos % 2 == 0 ? 1 : -1});
        }
        // Removing later vertices yields smaller masks, so columns arrive descending.
        std::reverse(row.begin(), row.end());
        rows.push_back(std::move(row));
    }
    return rank_over(std::move(rows), field);
}

HomologyProfile reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& field) {
    const int top = c.dimension() + 1;  // largest face size
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int k = 1; k <= top; ++k) {
        ranks[k] = boundary_rank(c, k, field);
    }
    HomologyProfile out;
    out.dims.resize(static_cast<std::size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) {
        const auto faces = static_cast<std::int64_t>(c.faces_of_size(k).size());
        out.dims[k] = faces - static_cast<std::int64_t>(ranks[k]) -
                      static_cast<std::int64_t>(ranks[k + 1]);
    }
    return out;
}

}  // namespace betticone
