#pragma once

// Position sets S_n, S_n^h and their total orders.

#include "betticone/diagram.hpp"

#include <optional>
#include <vector>

namespace betticone {

/// True iff p precedes q under the plain order: lower row first, then
/// ascending i.
bool cmp_plain(IndexPair p, IndexPair q) noexcept;

/// The height-h order. Row 1 and the i >= h part of every row ascend in i;
/// in rows above 1 the i < h block comes first, in descending i.
bool cmp_h(IndexPair p, IndexPair q, int h) noexcept;

class IndexSet {
public:
    int n() const noexcept { return n_; }
    std::optional<int> h() const noexcept { return h_; }

    /// Members in increasing order (≺ without h, ≺_h with h).
    const std::vector<IndexPair>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }

    bool contains(IndexPair p) const noexcept;

    /// Position of p in members(), or -1.
    int position(IndexPair p) const noexcept;

    bool precedes(IndexPair p, IndexPair q) const noexcept {
        return h_ ? cmp_h(p, q, *h_) : cmp_plain(p, q);
    }

    friend IndexSet index_set(int n, std::optional<int> h);

private:
    int n_ = 0;
    std::optional<int> h_;
    std::vector<IndexPair> members_;
};

/// S_n, or S_n^h = {(i,d) in S_n : d - i <= min(h, n-h) + 1}.
/// Throws std::invalid_argument if n < 0 or h is outside 0..n-1.
IndexSet index_set(int n, std::optional<int> h = std::nullopt);

/// b is nonzero at p and zero at every later member of `set`.
/// Throws std::invalid_argument if p is not in `set`.
bool is_initial(const BettiDiagram& b, IndexPair p, const IndexSet& set);

/// r^2 for n = 2r, r^2 + r for n = 2r + 1.
long long s_n_size(int n) noexcept;

}  // namespace betticone
