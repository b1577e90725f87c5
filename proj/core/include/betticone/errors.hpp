#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace betticone {

// Invalid arguments are reported with std::invalid_argument throughout.

/// Malformed graph text. `offset` is the byte position of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A computation was asked to run above a hard size cap.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A runtime certificate (initiality, rank, height) did not hold.
/// Signals an implementation bug rather than a usage error.
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A quantity is undefined for the given input, e.g. the regularity of the
/// zero diagram.
class UndefinedValueError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace betticone
