#include "betticone/simplicial_complex.hpp"

#include "betticone/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace betticone {

namespace {

std::vector<std::vector<VertexMask>> group_by_size(std::vector<VertexMask> faces) {
    std::sort(faces.begin(), faces.end(), [](VertexMask a, VertexMask b) {
        const int pa = std::popcount(a);
        const int pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<std::vector<VertexMask>> by_size;
    for (VertexMask f : faces) {
        const auto k = static_cast<std::size_t>(std::popcount(f));
        if (by_size.size() <= k) {
            by_size.resize(k + 1);
        }
        by_size[k].push_back(f);
    }
    return by_size;
}

}  // namespace

SimplicialComplex::SimplicialComplex() : by_size_{{VertexMask{0}}} {}

SimplicialComplex SimplicialComplex::from_faces(int n, std::vector<VertexMask> faces) {
    if (n < 0 || n > kMaxGraphVertices) {
        throw std::invalid_argument("ground set size out of range: " + std::to_string(n));
    }
    const VertexMask ground = n == 32 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
    faces.push_back(0);
    auto by_size = group_by_size(std::move(faces));
    for (std::size_t k = 1; k < by_size.size(); ++k) {
        if (by_size[k].empty()) {
            throw std::invalid_argument("face family is not downward closed");
        }
        for (VertexMask f : by_size[k]) {
            if ((f & ~ground) != 0) {
                throw std::invalid_argument("face uses a vertex outside the ground set");
            }
            for (VertexMask rest = f; rest != 0; rest &= rest - 1) {
                const VertexMask sub = f & ~(rest & -rest);
                if (!std::binary_search(by_size[k - 1].begin(), by_size[k - 1].end(), sub)) {
                    throw std::invalid_argument("face family is not downward closed");
                }
            }
        }
    }
    return SimplicialComplex(n, std::move(by_size));
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<VertexMask>& facets) {
    std::vector<VertexMask> faces;
    for (VertexMask f : facets) {
        // Every submask of f, including f and 0.
        for (VertexMask s = f;; s = (s - 1) & f) {
            faces.push_back(s);
            if (s == 0) {
                break;
            }
        }
    }
    return from_faces(n, std::move(faces));
}

std::span<const VertexMask> SimplicialComplex::faces_of_size(int k) const noexcept {
    if (k < 0 || k >= static_cast<int>(by_size_.size())) {
        return {};
    }
    return by_size_[k];
}

std::size_t SimplicialComplex::face_count() const noexcept {
    std::size_t total = 0;
    for (const auto& level : by_size_) {
        total += level.size();
    }
    return total;
}

bool SimplicialComplex::contains(VertexMask face) const noexcept {
    const auto level = faces_of_size(std::popcount(face));
    return std::binary_search(level.begin(), level.end(), face);
}

VertexMask SimplicialComplex::vertex_support() const noexcept {
    VertexMask out = 0;
    for (VertexMask v : faces_of_size(1)) {
        out |= v;
    }
    return out;
}

std::int64_t SimplicialComplex::reduced_euler_characteristic() const noexcept {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < by_size_.size(); ++k) {
        const auto count = static_cast<std::int64_t>(by_size_[k].size());
        chi += (k % 2 == 1) ? count : -count;
    }
    return chi;
}

SimplicialComplex independence_complex(const Graph& g) {
    return independence_complex(g, g.vertex_mask());
}

SimplicialComplex independence_complex(const Graph& g, VertexMask within) {
    if (g.vertex_count() > kMaxComplexVertices) {
        throw CapacityError("independence complex limited to " +
                            std::to_string(kMaxComplexVertices) + " vertices, got " +
                            std::to_string(g.vertex_count()));
    }
    within &= g.vertex_mask();
    std::vector<VertexMask> faces{0};
    for (VertexMask rest = within; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const VertexMask bit = VertexMask{1} << v;
        const VertexMask blocked = g.neighbors(v);
        const std::size_t existing = faces.size();
        for (std::size_t k = 0; k < existing; ++k) {
            if ((faces[k] & blocked) == 0) {
                faces.push_back(faces[k] | bit);
            }
        }
    }
    return SimplicialComplex(g.vertex_count(), group_by_size(std::move(faces)));
}

}  // namespace betticone
