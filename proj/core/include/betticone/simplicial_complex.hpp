#pragma once

#include "betticone/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace betticone {

inline constexpr int kMaxComplexVertices = 16;

/// A downward-closed family of vertex sets on a ground set of size n.
/// Faces are bitmasks; faces_of_size(k) holds the (k-1)-dimensional faces in
/// increasing numeric order. The empty face is always present.
class SimplicialComplex {
public:
    /// The complex {∅} on an empty ground set.
    SimplicialComplex();

    /// Throws std::invalid_argument if `faces` is not downward closed or uses
    /// vertices outside the ground set. The empty face is added if missing.
    static SimplicialComplex from_faces(int n, std::vector<VertexMask> faces);

    /// Downward closure of the given facets.
    static SimplicialComplex from_facets(int n, const std::vector<VertexMask>& facets);

    int ground_size() const noexcept { return n_; }

    /// -1 for {∅}.
    int dimension() const noexcept { return static_cast<int>(by_size_.size()) - 2; }

    std::span<const VertexMask> faces_of_size(int k) const noexcept;
    std::size_t face_count() const noexcept;
    bool contains(VertexMask face) const noexcept;

    /// Vertices appearing in some face.
    VertexMask vertex_support() const noexcept;

    /// Σ_k (-1)^(k-1) f_k over face sizes k, including the empty face.
    std::int64_t reduced_euler_characteristic() const noexcept;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    friend SimplicialComplex independence_complex(const Graph& g, VertexMask within);
    friend SimplicialComplex induced_subcomplex(const SimplicialComplex& c, VertexMask u);

    SimplicialComplex(int n, std::vector<std::vector<VertexMask>> by_size)
        : n_(n), by_size_(std::move(by_size)) {}

    int n_ = 0;
    std::vector<std::vector<VertexMask>> by_size_;
};

SimplicialComplex induced_subcomplex(const SimplicialComplex& c, VertexMask u);

/// Independent sets of g as faces. Throws CapacityError above 16 vertices.
SimplicialComplex independence_complex(const Graph& g);

/// Independent sets of g contained in `within`; equal to
/// induced_subcomplex(independence_complex(g), within).
SimplicialComplex independence_complex(const Graph& g, VertexMask within);

}  // namespace betticone
