#pragma once

#include <cstdint>
#include <string>

namespace betticone {

/// Coefficient field for homology: the rationals or a prime field GF(p).
class FieldSpec {
public:
    enum class Kind { rationals, prime };

    static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }

    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static FieldSpec prime_field(std::uint32_t p);

    /// "q" / "Q" select the rationals, a decimal prime selects GF(p).
    static FieldSpec parse(const std::string& text);

    Kind kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == Kind::rationals; }
    std::uint32_t characteristic() const noexcept { return p_; }

    /// "Q" or "GF(p)".
    std::string label() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint64_t p) noexcept;

}  // namespace betticone
