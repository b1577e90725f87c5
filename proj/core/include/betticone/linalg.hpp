#pragma once

// Exact rank computations on sparse integer matrices.
//
// Ranks over Q use fraction-free elimination: a row is reduced against the
// pivot row of its leading column by r <- (a/g) r - (b/g) p with g = gcd(a,b),
// then divided by its content. Everything stays integral. Work starts in
// overflow-checked 64-bit arithmetic and restarts with GMP integers if any
// intermediate value overflows.

#include "betticone/bigint.hpp"
#include "betticone/field.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace betticone {

template <class T>
struct SparseEntry {
    std::uint32_t col;
    T value;
};

/// Entries sorted by strictly increasing column, no zero values.
template <class T>
using SparseRow = std::vector<SparseEntry<T>>;

using IntRow = SparseRow<std::int64_t>;
using BigRow = SparseRow<BigInt>;

std::size_t rank_rational(std::vector<IntRow> rows);
std::size_t rank_rational(std::vector<BigRow> rows);

/// Rank over GF(p); values are reduced mod p first.
std::size_t rank_mod_prime(std::vector<IntRow> rows, std::uint32_t p);

std::size_t rank_over(std::vector<IntRow> rows, const FieldSpec& field);

/// Sorts by column, merges duplicates and drops zeros.
void canonicalize(IntRow& row);

/// Incrementally grown row-echelon basis over Q. insert() reports whether
/// the row was independent of everything inserted so far.
class RationalBasis {
public:
    RationalBasis();
    ~RationalBasis();
    RationalBasis(RationalBasis&&) noexcept;
    RationalBasis& operator=(RationalBasis&&) noexcept;

    bool insert(const IntRow& row);
    std::size_t rank() const noexcept;

    bool insert(const BigRow& row);

    /// The reduced pivot rows, ordered by pivot column.
    std::vector<BigRow> rows() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace betticone
