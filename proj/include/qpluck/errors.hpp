#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpluck {

// Input text could not be parsed. `offset` is the 0-based byte position of the
// first offending byte (== text size when input ended too early).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Arguments are outside the mathematical domain of the operation.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Exact polynomial division was requested but the remainder is nonzero
// (or the divisor is zero).
class not_divisible_error : public domain_error {
public:
    using domain_error::domain_error;
};

// A size cap was exceeded; the computation was refused rather than attempted.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed. Indicates a bug, never user error.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace qpluck
