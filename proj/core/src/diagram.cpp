#include "betticone/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace betticone {

std::string to_string(const IndexPair& p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.d) + ")";
}

BettiDiagram::BettiDiagram(int n_context,
                           std::initializer_list<std::pair<const IndexPair, std::int64_t>> entries)
    : n_context_(n_context) {
    for (const auto& [p, v] : entries) {
        set(p, v);
    }
}

std::int64_t BettiDiagram::at(IndexPair p) const noexcept {
    const auto it = entries_.find(p);
    return it == entries_.end() ? 0 : it->second;
}

void BettiDiagram::set(IndexPair p, std::int64_t value) {
    if (value < 0) {
        throw std::invalid_argument("negative Betti number at " + to_string(p));
    }
    if (value == 0) {
        entries_.erase(p);
    } else {
        entries_[p] = value;
    }
}

void BettiDiagram::add(IndexPair p, std::int64_t value) {
    set(p, at(p) + value);
}

std::string to_canonical_string(const BettiDiagram& b) {
    std::string out;
    for (const auto& [p, v] : b.entries()) {
        if (!out.empty()) {
            out += ';';
        }
        out += to_string(p) + "=" + std::to_string(v);
    }
    return out;
}

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    bool done() const { return pos_ == text_.size(); }

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    std::int64_t number() {
        std::int64_t value = 0;
        const char* first = text_.data() + pos_;
        const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
        if (ec != std::errc{} || ptr == first) {
            fail("expected an integer");
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("canonical diagram: " + what + " at position " +
                                    std::to_string(pos_));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

BettiDiagram parse_canonical(std::string_view text, int n_context) {
    BettiDiagram out(n_context);
    Scanner in(text);
    while (!in.done()) {
        in.expect('(');
        const auto i = in.number();
        in.expect(',');
        const auto d = in.number();
        in.expect(')');
        in.expect('=');
        const auto v = in.number();
        if (v <= 0) {
            in.fail("values must be positive");
        }
        const IndexPair p{static_cast<int>(i), static_cast<int>(d)};
        if (out.at(p) != 0) {
            in.fail("duplicate key " + to_string(p));
        }
        out.set(p, v);
        if (!in.done()) {
            in.expect(';');
            if (in.done()) {
                in.fail("trailing separator");
            }
        }
    }
    return out;
}

namespace {

struct Layout {
    int rows = 0;  // ρ = 1..rows
    int cols = 0;  // i = 0..cols-1
    int n = 0;

    bool in_window(int i, int rho) const {
        const int d = i + rho + 1;
        return i >= 0 && rho >= 1 && d >= i + 2 && d <= std::min(2 * i + 2, n);
    }
};

Layout layout_for(const BettiDiagram& b) {
    Layout l;
    l.n = b.n_context();
    for (const auto& [p, v] : b.entries()) {
        l.n = std::max(l.n, p.d);
    }
    // S_n spans i = 0..n-2; its deepest row is ρ = floor(n/2).
    if (l.n >= 2) {
        l.cols = l.n - 1;
        l.rows = l.n / 2;
    }
    for (const auto& [p, v] : b.entries()) {
        l.cols = std::max(l.cols, p.i + 1);
        l.rows = std::max(l.rows, p.row());
    }
    return l;
}

}  // namespace

std::string render_table(const BettiDiagram& b) {
    const Layout l = layout_for(b);
    if (l.rows == 0) {
        return "(zero diagram)\n";
    }
    std::size_t width = 1;
    for (int i = 0; i < l.cols; ++i) {
        width = std::max(width, std::to_string(i).size());
    }
    for (const auto& [p, v] : b.entries()) {
        width = std::max(width, std::to_string(v).size());
    }
    const std::size_t label = std::to_string(l.rows).size() + 1;
    auto pad = [&](const std::string& cell, std::size_t visible) {
        return std::string(width - visible, ' ') + cell;
    };

    std::ostringstream out;
    out << std::string(label, ' ');
    for (int i = 0; i < l.cols; ++i) {
        const auto s = std::to_string(i);
        out << ' ' << pad(s, s.size());
    }
    out << '\n';
    for (int rho = 1; rho <= l.rows; ++rho) {
        std::string line = std::to_string(rho) + ":";
        line.insert(0, label - line.size(), ' ');
        for (int i = 0; i < l.cols; ++i) {
            const std::int64_t v = b.at(i, i + rho + 1);
            line += ' ';
            if (v != 0) {
                const auto s = std::to_string(v);
                line += pad(s, s.size());
            } else if (l.in_window(i, rho)) {
                line += pad("·", 1);
            } else {
                line += std::string(width, ' ');
            }
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        out << line << '\n';
    }
    return out.str();
}

std::string render_csv(const BettiDiagram& b) {
    const Layout l = layout_for(b);
    std::ostringstream out;
    out << "row";
    for (int i = 0; i < l.cols; ++i) {
        out << ',' << i;
    }
    out << '\n';
    for (int rho = 1; rho <= l.rows; ++rho) {
        out << rho;
        for (int i = 0; i < l.cols; ++i) {
            out << ',';
            if (const std::int64_t v = b.at(i, i + rho + 1); v != 0) {
                out << v;
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace betticone
