#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qpluck/poly.hpp"

namespace qpluck {

inline constexpr std::uint64_t kWordCap = 10'000'000;

// Monomial x1^a1 ... xk^ak in the normal (ascending-index) order.
struct Monomial {
    std::vector<unsigned> exponents;

    auto operator<=>(const Monomial& o) const = default;
    std::string to_text() const;  // "x1^2*x3"; "1" for the empty monomial
};

// (x1 + ... + xk)^n over variables obeying x_j x_i = q x_i x_j for i < j,
// expanded into normal-ordered monomials with coefficients in Z[q].
struct Expansion {
    unsigned var_count = 0;
    unsigned power = 0;
    std::map<Monomial, IntPoly> terms;

    bool operator==(const Expansion& o) const = default;
};

// Expands by walking all k^n words and counting inversions; refuses more
// than `word_cap` words (resource_error). The plain variant fans word
// prefixes out with OpenMP; the serial variant is its reference.
Expansion expand_power(unsigned k, unsigned n,
                       std::uint64_t word_cap = kWordCap);
Expansion expand_power_serial(unsigned k, unsigned n,
                              std::uint64_t word_cap = kWordCap);

// True iff every coefficient of expand_power(k, n) equals the corresponding
// q-multinomial and no monomial is missing.
bool verify_multinomial_theorem(unsigned k, unsigned n,
                                std::uint64_t word_cap = kWordCap);

}  // namespace qpluck
