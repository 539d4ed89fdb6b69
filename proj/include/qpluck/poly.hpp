#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qpluck {

// Dense polynomial over Z in the formal variable q. coeff(i) is the
// coefficient of q^i. Canonical form: the zero polynomial stores no
// coefficients; otherwise the highest stored coefficient is nonzero.
// Coefficients are arbitrary-precision integers (GMP).
class IntPoly {
public:
    using Coef = mpz_class;

    IntPoly() = default;
    IntPoly(long constant);  // NOLINT: implicit by design, 3 * p reads naturally

    static IntPoly from_coeffs(std::vector<Coef> coeffs);
    static IntPoly q_power(std::size_t k);  // the monomial q^k
    // [m]_q = 1 + q + ... + q^(m-1); m == 0 gives the zero polynomial.
    static IntPoly all_ones(std::size_t m);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree; nullopt for the zero polynomial.
    std::optional<std::int64_t> degree() const;
    std::size_t size() const { return coeffs_.size(); }
    const Coef& coeff(std::size_t i) const;  // 0 beyond the stored range
    const std::vector<Coef>& coeffs() const { return coeffs_; }

    IntPoly shifted(std::size_t k) const;  // this * q^k
    Coef value_at_one() const;             // evaluate at q = 1

    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

    // Human-readable text: "1 + 2*q + q^2"; zero terms omitted, unit
    // coefficients omitted before q, the zero polynomial prints as "0".
    std::string to_text() const;
    // Coefficients c0..cN as decimal strings (empty for the zero polynomial).
    std::vector<std::string> decimal_coeffs() const;

private:
    std::vector<Coef> coeffs_;
    void normalize();
};

// Exact quotient a / b over Z[q]; throws not_divisible_error when b is zero
// or does not divide a exactly.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

// Product of a collection of polynomials, combining the two currently
// smallest factors first. Empty input gives 1.
IntPoly poly_product(std::vector<IntPoly> factors);

// Strict total order: by degree, then by coefficients from the top down.
bool poly_less(const IntPoly& a, const IntPoly& b);

struct PolyLess {
    bool operator()(const IntPoly& a, const IntPoly& b) const {
        return poly_less(a, b);
    }
};

}  // namespace qpluck
