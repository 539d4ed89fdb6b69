#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpluck/poly.hpp"

namespace qpluck {

// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
IntPoly q_int(unsigned n);

// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
IntPoly q_factorial(unsigned n);

// Gaussian binomial coefficient; throws domain_error when i > n.
// Computed by the Pascal-style recurrence (memoized) for moderate n and by
// its cyclotomic factorization for large n; both routes are division-free
// over Z[q].
IntPoly q_binomial(unsigned n, unsigned i);

// q-multinomial coefficient for the given parts (nonempty, zeros allowed),
// built as a telescoping product of Gaussian binomials.
IntPoly q_multinomial(const std::vector<unsigned>& parts);

// d-th cyclotomic polynomial, d >= 1.
IntPoly cyclotomic(unsigned d);

// A product of cyclotomic polynomials with positive multiplicities,
// kept in factored form. Indices ascend.
struct CyclotomicFactorization {
    std::vector<std::pair<unsigned, unsigned>> factors;

    IntPoly expand() const;
    std::string to_text() const;  // e.g. "Ψ2 · Ψ4^2"; "1" when empty
    bool operator==(const CyclotomicFactorization& o) const = default;
};

// Factor a Gaussian binomial into cyclotomics using
//   exponent of Ψ_d = floor(n/d) - floor(i/d) - floor((n-i)/d)
// and verify the result by re-expansion (invariant_error on mismatch).
CyclotomicFactorization factor_q_binomial(unsigned n, unsigned i);

// Factor [n]_q!: the exponent of Ψ_d is floor(n/d), d = 2..n.
CyclotomicFactorization factor_q_factorial(unsigned n);

// Cyclotomic exponent vector that may carry negative exponents, for
// quotients of q-factorial products; kept factored, never expanded.
using SignedCycFactors = std::vector<std::pair<unsigned, long>>;

std::string signed_factors_to_text(const SignedCycFactors& f);

}  // namespace qpluck
