#include "betticone/field.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace betticone {

bool is_prime(std::uint64_t p) noexcept {
    if (p < 2) {
        return false;
    }
    for (std::uint64_t q = 2; q * q <= p; ++q) {
        if (p % q == 0) {
            return false;
        }
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
    if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
        throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                    " is not a prime below 2^31");
    }
    return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") {
        return rationals();
    }
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || value > std::numeric_limits<std::uint32_t>::max()) {
        throw std::invalid_argument("field must be 'q' or a prime, got '" + text + "'");
    }
    return prime_field(static_cast<std::uint32_t>(value));
}

std::string FieldSpec::label() const {
    return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

}  // namespace betticone
