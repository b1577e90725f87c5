#include "betticone/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace betticone {

void canonicalize(IntRow& row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
    IntRow merged;
    merged.reserve(row.size());
    for (const auto& e : row) {
        if (!merged.empty() && merged.back().col == e.col) {
            merged.back().value += e.value;
        } else {
            merged.push_back(e);
        }
    }
    std::erase_if(merged, [](const auto& e) { return e.value == 0; });
    row.swap(merged);
}

namespace {

struct Overflow {};

// Integer arithmetic that throws Overflow instead of wrapping.
struct CheckedIntRing {
    using value_type = std::int64_t;

    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t out;
        if (__builtin_mul_overflow(a, b, &out)) {
            throw Overflow{};
        }
        return out;
    }
    static std::int64_t sub(std::int64_t a, std::int64_t b) {
        std::int64_t out;
        if (__builtin_sub_overflow(a, b, &out)) {
            throw Overflow{};
        }
        return out;
    }
    static std::int64_t abs(std::int64_t a) {
        if (a == std::numeric_limits<std::int64_t>::min()) {
            throw Overflow{};
        }
        return a < 0 ? -a : a;
    }

    std::int64_t from(std::int64_t v) const { return v; }

    // r <- (a/g) r - (b/g) p, where a, b are the leading values of p, r.
    void eliminate(IntRow& r, const IntRow& p, IntRow& out) const {
        const std::int64_t a = p.front().value;
        const std::int64_t b = r.front().value;
        const std::int64_t g = std::gcd(abs(a), abs(b));
        const std::int64_t ca = a / g;
        const std::int64_t cb = b / g;
        out.clear();
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < r.size() || j < p.size()) {
            if (j == p.size() || (i < r.size() && r[i].col < p[j].col)) {
                out.push_back({r[i].col, mul(ca, r[i].value)});
                ++i;
            } else if (i == r.size() || p[j].col < r[i].col) {
                out.push_back({p[j].col, sub(0, mul(cb, p[j].value))});
                ++j;
            } else {
                const std::int64_t v = sub(mul(ca, r[i].value), mul(cb, p[j].value));
                if (v != 0) {
                    out.push_back({r[i].col, v});
                }
                ++i;
                ++j;
            }
        }
        r.swap(out);
        normalize(r);
    }

    void normalize(IntRow& r) const {
        if (r.empty()) {
            return;
        }
        std::int64_t g = 0;
        for (const auto& e : r) {
            g = std::gcd(g, abs(e.value));
            if (g == 1) {
                break;
            }
        }
        const std::int64_t s = r.front().value < 0 ? -g : g;
        if (s != 1) {
            for (auto& e : r) {
                e.value /= s;
            }
        }
    }
};

struct BigIntRing {
    using value_type = BigInt;

    BigInt from(std::int64_t v) const { return BigInt(static_cast<long>(v)); }

    void eliminate(BigRow& r, const BigRow& p, BigRow& out) const {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), p.front().value.get_mpz_t(), r.front().value.get_mpz_t());
        BigInt ca;
        BigInt cb;
        mpz_divexact(ca.get_mpz_t(), p.front().value.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(cb.get_mpz_t(), r.front().value.get_mpz_t(), g.get_mpz_t());
        out.clear();
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < r.size() || j < p.size()) {
            if (j == p.size() || (i < r.size() && r[i].col < p[j].col)) {
                out.push_back({r[i].col, ca * r[i].value});
                ++i;
            } else if (i == r.size() || p[j].col < r[i].col) {
                out.push_back({p[j].col, -(cb * p[j].value)});
                ++j;
            } else {
                BigInt v = ca * r[i].value - cb * p[j].value;
                if (v != 0) {
                    out.push_back({r[i].col, std::move(v)});
                }
                ++i;
                ++j;
            }
        }
        r.swap(out);
        normalize(r);
    }

    void normalize(BigRow& r) const {
        if (r.empty()) {
            return;
        }
        BigInt g = 0;
        for (const auto& e : r) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
            if (g == 1) {
                break;
            }
        }
        if (r.front().value < 0) {
            g = -g;
        }
        if (g != 1) {
            for (auto& e : r) {
                mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
            }
        }
    }
};

struct PrimeRing {
    using value_type = std::uint32_t;
    std::uint32_t p;

    std::uint32_t from(std::int64_t v) const {
        const auto m = static_cast<std::int64_t>(p);
        return static_cast<std::uint32_t>(((v % m) + m) % m);
    }

    std::uint32_t inverse(std::uint32_t a) const {
        // Fermat: a^(p-2).
        std::uint64_t result = 1;
        std::uint64_t base = a;
        for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
            if (e & 1U) {
                result = result * base % p;
            }
            base = base * base % p;
        }
        return static_cast<std::uint32_t>(result);
    }

    // Pivot rows are monic, so r <- r - b p.
    void eliminate(SparseRow<std::uint32_t>& r, const SparseRow<std::uint32_t>& piv,
                   SparseRow<std::uint32_t>& out) const {
        const std::uint64_t b = r.front().value;
        out.clear();
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < r.size() || j < piv.size()) {
            if (j == piv.size() || (i < r.size() && r[i].col < piv[j].col)) {
                out.push_back(r[i++]);
            } else if (i == r.size() || piv[j].col < r[i].col) {
                out.push_back({piv[j].col, static_cast<std::uint32_t>((p - b * piv[j].value % p) % p)});
                ++j;
            } else {
                const std::uint64_t v = (r[i].value + p - b * piv[j].value % p) % p;
                if (v != 0) {
                    out.push_back({r[i].col, static_cast<std::uint32_t>(v)});
                }
                ++i;
                ++j;
            }
        }
        r.swap(out);
    }

    void normalize(SparseRow<std::uint32_t>& r) const {
        if (r.empty() || r.front().value == 1) {
            return;
        }
        const std::uint64_t inv = inverse(r.front().value);
        for (auto& e : r) {
            e.value = static_cast<std::uint32_t>(e.value * inv % p);
        }
    }
};

// Row-echelon form keyed by leading column.
template <class Ring>
class Echelon {
public:
    using T = typename Ring::value_type;
    using Row = SparseRow<T>;

    explicit Echelon(Ring ring = {}) : ring_(std::move(ring)) {}

    // The basis is left untouched if the ring throws mid-reduction.
    bool insert(Row r) {
        while (!r.empty()) {
            const std::uint32_t c = r.front().col;
            if (c >= pivots_.size()) {
                pivots_.resize(c + 1);
            }
            const Row& pivot = pivots_[c];
            if (pivot.empty()) {
                ring_.normalize(r);
                pivots_[c] = std::move(r);
                ++rank_;
                return true;
            }
            ring_.eliminate(r, pivot, scratch_);
        }
        return false;
    }

    std::size_t rank() const noexcept { return rank_; }
    const std::vector<Row>& pivots() const noexcept { return pivots_; }
    const Ring& ring() const noexcept { return ring_; }

private:
    Ring ring_;
    std::vector<Row> pivots_;
    std::size_t rank_ = 0;
    Row scratch_;
};

template <class Ring>
SparseRow<typename Ring::value_type> convert(const Ring& ring, const IntRow& row) {
    SparseRow<typename Ring::value_type> out;
    out.reserve(row.size());
    for (const auto& e : row) {
        auto v = ring.from(e.value);
        if (v != 0) {
            out.push_back({e.col, std::move(v)});
        }
    }
    return out;
}

BigRow to_big(const IntRow& row) {
    BigRow out;
    out.reserve(row.size());
    for (const auto& e : row) {
        out.push_back({e.col, BigInt(static_cast<long>(e.value))});
    }
    return out;
}

template <class Row>
void check_sorted(const Row& row) {
    for (std::size_t k = 1; k < row.size(); ++k) {
        if (row[k - 1].col >= row[k].col) {
            throw std::invalid_argument("sparse row columns must be strictly increasing");
        }
    }
}

}  // namespace

std::size_t rank_rational(std::vector<BigRow> rows) {
    Echelon<BigIntRing> echelon;
    for (auto& row : rows) {
        check_sorted(row);
        std::erase_if(row, [](const auto& e) { return e.value == 0; });
        echelon.insert(std::move(row));
    }
    return echelon.rank();
}

std::size_t rank_rational(std::vector<IntRow> rows) {
    for (auto& row : rows) {
        check_sorted(row);
        std::erase_if(row, [](const auto& e) { return e.value == 0; });
    }
    try {
        Echelon<CheckedIntRing> echelon;
        for (const auto& row : rows) {
            echelon.insert(row);
        }
        return echelon.rank();
    } catch (const Overflow&) {
        std::vector<BigRow> big;
        big.reserve(rows.size());
        for (const auto& row : rows) {
            big.push_back(to_big(row));
        }
        return rank_rational(std::move(big));
    }
}

std::size_t rank_mod_prime(std::vector<IntRow> rows, std::uint32_t p) {
    if (!is_prime(p)) {
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    PrimeRing ring{p};
    Echelon<PrimeRing> echelon(ring);
    for (const auto& row : rows) {
        check_sorted(row);
        echelon.insert(convert(ring, row));
    }
    return echelon.rank();
}

std::size_t rank_over(std::vector<IntRow> rows, const FieldSpec& field) {
    return field.is_rational() ? rank_rational(std::move(rows))
                               : rank_mod_prime(std::move(rows), field.characteristic());
}

// ---------------------------------------------------------------------------

struct RationalBasis::Impl {
    std::variant<Echelon<CheckedIntRing>, Echelon<BigIntRing>> echelon;

    void promote() {
        const auto& small = std::get<Echelon<CheckedIntRing>>(echelon);
        Echelon<BigIntRing> big;
        for (const auto& row : small.pivots()) {
            if (!row.empty()) {
                big.insert(to_big(row));
            }
        }
        echelon = std::move(big);
    }
};

RationalBasis::RationalBasis() : impl_(std::make_unique<Impl>()) {}
RationalBasis::~RationalBasis() = default;
RationalBasis::RationalBasis(RationalBasis&&) noexcept = default;
RationalBasis& RationalBasis::operator=(RationalBasis&&) noexcept = default;

bool RationalBasis::insert(const IntRow& row) {
    check_sorted(row);
    IntRow clean = row;
    std::erase_if(clean, [](const auto& e) { return e.value == 0; });
    if (auto* small = std::get_if<Echelon<CheckedIntRing>>(&impl_->echelon)) {
        try {
            return small->insert(std::move(clean));
        } catch (const Overflow&) {
            impl_->promote();
        }
    }
    return std::get<Echelon<BigIntRing>>(impl_->echelon).insert(to_big(clean));
}

bool RationalBasis::insert(const BigRow& row) {
    check_sorted(row);
    BigRow clean = row;
    std::erase_if(clean, [](const auto& e) { return e.value == 0; });
    if (std::holds_alternative<Echelon<CheckedIntRing>>(impl_->echelon)) {
        bool fits = true;
        IntRow small_row;
        for (const auto& e : clean) {
            if (!e.value.fits_slong_p()) {
                fits = false;
                break;
            }
            small_row.push_back({e.col, e.value.get_si()});
        }
        if (fits) {
            return insert(small_row);
        }
        impl_->promote();
    }
    return std::get<Echelon<BigIntRing>>(impl_->echelon).insert(std::move(clean));
}

std::size_t RationalBasis::rank() const noexcept {
    return std::visit([](const auto& e) { return e.rank(); }, impl_->echelon);
}

std::vector<BigRow> RationalBasis::rows() const {
    std::vector<BigRow> out;
    std::visit(
        [&](const auto& e) {
            for (const auto& row : e.pivots()) {
                if (row.empty()) {
                    continue;
                }
                BigRow big;
                for (const auto& entry : row) {
                    big.push_back({entry.col, BigInt(entry.value)});
                }
                out.push_back(std::move(big));
            }
        },
        impl_->echelon);
    return out;
}

}  // namespace betticone
