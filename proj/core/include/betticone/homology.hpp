#pragma once

#include "betticone/field.hpp"
#include "betticone/simplicial_complex.hpp"

#include <cstdint>
#include <vector>

namespace betticone {

/// Reduced homology dimensions H̃_j for j = -1 .. dim.
struct HomologyProfile {
    /// dims[j + 1] = dim H̃_j.
    std::vector<std::int64_t> dims;

    /// 0 outside the stored range.
    std::int64_t operator()(int j) const noexcept {
        const int k = j + 1;
        return k >= 0 && k < static_cast<int>(dims.size()) ? dims[k] : 0;
    }
    int top_degree() const noexcept { return static_cast<int>(dims.size()) - 2; }
    bool is_zero() const noexcept;

    /// Σ_j (-1)^j dims[j].
    std::int64_t euler_characteristic() const noexcept;

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// Rank of the reduced boundary map from faces of size k to faces of size
/// k-1 (k = 1 is the augmentation onto the empty face).
std::size_t boundary_rank(const SimplicialComplex& c, int k, const FieldSpec& field);

HomologyProfile reduced_homology_dims(const SimplicialComplex& c,
                                      const FieldSpec& field = FieldSpec::rationals());

}  // namespace betticone
