#pragma once

#include <cstddef>

#include "qpluck/poly.hpp"
#include "qpluck/qcalc.hpp"
#include "qpluck/tree.hpp"

namespace qpluck {

inline constexpr std::size_t kBruteForceEdgeCap = 8;

// The plucking polynomial: 1 for the one-vertex tree, otherwise
// sum over leaves v of q^{r(T,v)} * Q(T - v).

// Oracle route: walks every complete leaf-removal sequence, one addend per
// sequence. Exponential; refuses trees above `max_edges` (resource_error).
IntPoly q_poly_bruteforce(const Tree& t,
                          std::size_t max_edges = kBruteForceEdgeCap);

// Same recursion with memoization on the plane shape of the subproblem.
IntPoly q_poly_recursive(const Tree& t);

// Closed form: product over vertices of the q-multinomial with one part
// (edge_count(child) + 1) per child. Linear number of factors; the route
// used by everything performance-sensitive.
IntPoly q_poly_state_product(const Tree& t);

// Predicted value for the wedge of two trees:
// binom(E1 + E2, E1)_q * Q(t1) * Q(t2).
IntPoly wedge_product_value(const Tree& t1, const Tree& t2);

// Change-of-root identity across the root edge to the given child, checked
// without division: Q(T) * [E2 + 1]_q == Q(T rerooted) * [E1 + 1]_q where E2
// counts edges in the child subtree and E1 = E - 1 - E2.
bool reroot_identity_check(const Tree& t, std::size_t child_index);

// Q in cyclotomic-factored form, verified by re-expansion against the state
// product (invariant_error on mismatch).
CyclotomicFactorization q_poly_factored(const Tree& t);

// Factored form of Q(T) / [E]_q!, which may carry negative exponents; only
// ever handled factored.
SignedCycFactors q_prime_factored(const Tree& t);

}  // namespace qpluck
