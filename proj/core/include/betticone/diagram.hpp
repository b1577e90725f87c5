#pragma once

// Sparse graded Betti diagrams (i, d) -> β_{i,d}.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace betticone {

struct IndexPair {
    int i = 0;
    int d = 0;

    /// Row in the matrix layout: d - i - 1.
    int row() const noexcept { return d - i - 1; }

    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

std::string to_string(const IndexPair& p);

class BettiDiagram {
public:
    using Map = std::map<IndexPair, std::int64_t>;

    BettiDiagram() = default;
    explicit BettiDiagram(int n_context) : n_context_(n_context) {}

    /// Zero values are dropped; negative values throw std::invalid_argument.
    BettiDiagram(int n_context, std::initializer_list<std::pair<const IndexPair, std::int64_t>> entries);

    std::int64_t at(IndexPair p) const noexcept;
    std::int64_t at(int i, int d) const noexcept { return at(IndexPair{i, d}); }

    /// Setting zero erases the entry.
    void set(IndexPair p, std::int64_t value);
    void add(IndexPair p, std::int64_t value);

    const Map& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }

    /// Ambient vertex count used for support checks and layout.
    int n_context() const noexcept { return n_context_; }
    void set_n_context(int n) noexcept { n_context_ = n; }

    /// Entries only; n_context is ignored.
    friend bool operator==(const BettiDiagram& a, const BettiDiagram& b) {
        return a.entries_ == b.entries_;
    }

private:
    Map entries_;
    int n_context_ = 0;
};

/// "(i,d)=v;..." sorted by (i, d); the zero diagram is "".
std::string to_canonical_string(const BettiDiagram& b);

/// Inverse of to_canonical_string. Throws std::invalid_argument.
BettiDiagram parse_canonical(std::string_view text, int n_context = 0);

/// Matrix layout: column i, row d-i-1. Zeros inside the S_n window print as
/// "·", cells outside it stay blank.
std::string render_table(const BettiDiagram& b);

/// Rows d-i-1, columns i, zero cells blank. First line is a header.
std::string render_csv(const BettiDiagram& b);

}  // namespace betticone
