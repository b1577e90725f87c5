#include "betticone/index_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace betticone {

bool cmp_plain(IndexPair p, IndexPair q) noexcept {
    if (p.row() != q.row()) {
        return p.row() < q.row();
    }
    return p.i < q.i;
}

bool cmp_h(IndexPair p, IndexPair q, int h) noexcept {
    if (p.row() != q.row()) {
        return p.row() < q.row();
    }
    if (p.i == q.i) {
        return false;
    }
    if (p.row() == 1) {
        return p.i < q.i;
    }
    const bool p_low = p.i < h;
    const bool q_low = q.i < h;
    if (p_low && q_low) {
        return p.i > q.i;
    }
    if (p_low != q_low) {
        return p_low;
    }
    return p.i < q.i;
}

bool IndexSet::contains(IndexPair p) const noexcept {
    return position(p) >= 0;
}

int IndexSet::position(IndexPair p) const noexcept {
    for (std::size_t k = 0; k < members_.size(); ++k) {
        if (members_[k] == p) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

IndexSet index_set(int n, std::optional<int> h) {
    if (n < 0) {
        throw std::invalid_argument("n must be non-negative");
    }
    if (h && (*h < 0 || *h >= n)) {
        throw std::invalid_argument("height " + std::to_string(*h) + " outside 0.." +
                                    std::to_string(n - 1));
    }
    IndexSet out;
    out.n_ = n;
    out.h_ = h;
    const int max_gap = h ? std::min(*h, n - *h) + 1 : n;
    for (int i = 0; i + 2 <= n; ++i) {
        for (int d = i + 2; d <= std::min(2 * i + 2, n); ++d) {
            if (d - i <= max_gap) {
                out.members_.push_back({i, d});
            }
        }
    }
    std::sort(out.members_.begin(), out.members_.end(),
              [&](IndexPair p, IndexPair q) { return out.precedes(p, q); });
    return out;
}

bool is_initial(const BettiDiagram& b, IndexPair p, const IndexSet& set) {
    const int pos = set.position(p);
    if (pos < 0) {
        throw std::invalid_argument(to_string(p) + " is not in the index set");
    }
    if (b.at(p) == 0) {
        return false;
    }
    const auto& members = set.members();
    return std::all_of(members.begin() + pos + 1, members.end(),
                       [&](IndexPair q) { return b.at(q) == 0; });
}

long long s_n_size(int n) noexcept {
    const long long r = n / 2;
    return n % 2 == 0 ? r * r : r * r + r;
}

}  // namespace betticone
