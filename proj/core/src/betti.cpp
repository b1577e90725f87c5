#include "betticone/betti.hpp"

#include "betticone/errors.hpp"
#include "hochster_kernel.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace betticone {

namespace {

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::int64_t out = 1;
    for (int t = 1; t <= k; ++t) {
        out = out * (n - k + t) / t;
    }
    return out;
}

}  // namespace

BettiDiagram hochster_diagram(const Graph& g, const HochsterOptions& options) {
    const int n = g.vertex_count();
    if (n > kMaxHochsterVertices) {
        throw CapacityError("Hochster sum limited to " + std::to_string(kMaxHochsterVertices) +
                            " vertices, got " + std::to_string(n));
    }
    const auto& tables = detail::ProfileTables::get(options.field);
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<detail::DenseBetti> partial(std::max(1U, options.workers), detail::DenseBetti(n));
    detail::parallel_slices(options.workers, subsets,
                            [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
                                for (std::uint64_t u = std::max<std::uint64_t>(begin, 1); u < end; ++u) {
                                    detail::accumulate_subset(g, static_cast<VertexMask>(u),
                                                              options.field, tables,
                                                              options.skip_cones, partial[w]);
                                }
                            });
    for (std::size_t w = 1; w < partial.size(); ++w) {
        partial[0].merge(partial[w]);
    }
    return partial[0].to_diagram();
}

BettiDiagram hochster_diagram(const Graph& g, const FieldSpec& field) {
    HochsterOptions options;
    options.field = field;
    return hochster_diagram(g, options);
}

BettiDiagram diagram_complete(int m) {
    if (m < 0) {
        throw std::invalid_argument("m must be non-negative");
    }
    BettiDiagram out(m);
    for (int i = 0; i <= m - 2; ++i) {
        out.set({i, i + 2}, (i + 1) * binomial(m, i + 2));
    }
    return out;
}

namespace detail {

BettiDiagram cycle_complement_literal(int m) {
    if (m < 3) {
        throw std::invalid_argument("cycle needs m >= 3");
    }
    BettiDiagram out(m);
    for (int i = 0; i <= m - 4; ++i) {
        const std::int64_t num = static_cast<std::int64_t>(m) * (i + 1) * binomial(m - 2, i + 2);
        const std::int64_t den = m - i - 2;
        if (num % den != 0) {
            throw std::logic_error("cycle complement closed form is not integral at i=" +
                                   std::to_string(i));
        }
        out.set({i, i + 2}, num / den);
    }
    out.set({m - 3, m}, 1);
    return out;
}

}  // namespace detail

BettiDiagram diagram_cycle_complement(int m) {
    if (m < 4) {
        throw std::invalid_argument("closed form for the cycle complement needs m >= 4, got " +
                                    std::to_string(m));
    }
    return detail::cycle_complement_literal(m);
}

BettiDiagram suspend_diagram(const BettiDiagram& b) {
    BettiDiagram out(b.n_context() + 2);
    for (const auto& [p, v] : b.entries()) {
        out.add(p, v);
        out.add({p.i + 1, p.d + 2}, v);
    }
    out.add({0, 2}, 1);
    return out;
}

PaddedDiagram pad_complement_diagram(const BettiDiagram& b, int l, int m) {
    if (l < 0 || l >= m) {
        throw std::invalid_argument("padding needs 0 <= l < m");
    }
    PaddedDiagram out;
    out.upper_rows.set_n_context(m);
    for (int i = 0; i + 2 <= m; ++i) {
        out.row1_support.push_back({i, i + 2});
        for (int d = i + 3; d <= std::min(2 * i + 2, m); ++d) {
            std::int64_t sum = 0;
            for (int j = 0; j <= i; ++j) {
                sum += binomial(m - l, i - j) * b.at(j, j + d - i);
            }
            out.upper_rows.set({i, d}, sum);
        }
    }
    return out;
}

BettiDiagram pad_complement_diagram_full(const Graph& g, int m, const FieldSpec& field) {
    const int l = g.vertex_count();
    const PaddedDiagram padded = pad_complement_diagram(hochster_diagram(complement(g), field), l, m);
    const BettiDiagram direct =
        hochster_diagram(complement(disjoint_union(g, Graph(m - l))), field);
    BettiDiagram out = padded.upper_rows;
    for (IndexPair p : padded.row1_support) {
        if (direct.at(p) == 0) {
            throw VerificationError("padded diagram vanishes at row-1 position " + to_string(p));
        }
        out.set(p, direct.at(p));
    }
    return out;
}

BigInt hk_functional(const BettiDiagram& b, int j) {
    if (j < 0) {
        throw std::invalid_argument("HK degree must be non-negative");
    }
    BigInt total = 0;
    BigInt term;
    for (const auto& [p, v] : b.entries()) {
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(p.d), static_cast<unsigned long>(j));
        term *= static_cast<long>(v);
        if (p.i % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

std::vector<BigInt> hk_vector(const BettiDiagram& b, int max_j) {
    std::vector<BigInt> out;
    for (int j = 0; j <= max_j; ++j) {
        out.push_back(hk_functional(b, j));
    }
    return out;
}

int regularity(const BettiDiagram& b) {
    if (b.empty()) {
        throw UndefinedValueError("regularity of the zero diagram is undefined");
    }
    int reg = 0;
    for (const auto& [p, v] : b.entries()) {
        reg = std::max(reg, p.d - p.i);
    }
    return reg;
}

bool check_support_cn(const BettiDiagram& b, int n) noexcept {
    return std::all_of(b.entries().begin(), b.entries().end(), [n](const auto& e) {
        const IndexPair p = e.first;
        return p.i >= 0 && p.i + 2 <= p.d && p.d <= std::min(2 * p.i + 2, n);
    });
}

bool check_support_cnh(const BettiDiagram& b, int n, int h) noexcept {
    if (!check_support_cn(b, n)) {
        return false;
    }
    const int max_gap = std::min(h, n - h) + 1;
    return std::all_of(b.entries().begin(), b.entries().end(),
                       [max_gap](const auto& e) { return e.first.d - e.first.i <= max_gap; });
}

}  // namespace betticone
