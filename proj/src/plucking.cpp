#include "qpluck/plucking.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qpluck/errors.hpp"

namespace qpluck {

namespace {

void brute_rec(const Tree& t, std::size_t exponent,
               std::vector<mpz_class>& counts) {
    const auto ls = leaves(t);
    if (ls.empty()) {
        counts[exponent] += 1;
        return;
    }
    for (const LeafPath& v : ls) {
        brute_rec(remove_leaf(t, v), exponent + r_exponent(t, v), counts);
    }
}

IntPoly recursive_memo(const Tree& t,
                       std::unordered_map<std::string, IntPoly>& memo) {
    const auto ls = leaves(t);
    if (ls.empty()) return IntPoly(1);
    const std::string key = serialize_tree(t);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    IntPoly sum;
    for (const LeafPath& v : ls) {
        sum += recursive_memo(remove_leaf(t, v), memo)
                   .shifted(r_exponent(t, v));
    }
    return memo.emplace(key, std::move(sum)).first->second;
}

void collect_vertex_weights(const Tree& t, std::vector<IntPoly>& out) {
    if (t.children.size() >= 2) {
        std::vector<unsigned> parts;
        parts.reserve(t.children.size());
        for (const Tree& c : t.children) {
            parts.push_back(static_cast<unsigned>(edge_count(c)) + 1);
        }
        out.push_back(q_multinomial(parts));
    }
    for (const Tree& c : t.children) collect_vertex_weights(c, out);
}

// Cyclotomic exponents of one vertex weight, telescoped over the children.
void add_vertex_weight_exponents(const std::vector<unsigned>& parts,
                                 std::map<unsigned, long>& exps) {
    unsigned total = 0;
    for (unsigned a : parts) {
        total += a;
        if (a == 0 || a == total) continue;
        for (unsigned d = 2; d <= total; ++d) {
            const unsigned e = total / d - a / d - (total - a) / d;
            if (e != 0) exps[d] += e;
        }
    }
}

void collect_factored_weights(const Tree& t, std::map<unsigned, long>& exps) {
    if (t.children.size() >= 2) {
        std::vector<unsigned> parts;
        parts.reserve(t.children.size());
        for (const Tree& c : t.children) {
            parts.push_back(static_cast<unsigned>(edge_count(c)) + 1);
        }
        add_vertex_weight_exponents(parts, exps);
    }
    for (const Tree& c : t.children) collect_factored_weights(c, exps);
}

}  // namespace

IntPoly q_poly_bruteforce(const Tree& t, std::size_t max_edges) {
    const std::size_t e = edge_count(t);
    if (e > max_edges) {
        throw resource_error("q_poly_bruteforce: tree has " +
                             std::to_string(e) + " edges, cap is " +
                             std::to_string(max_edges));
    }
    std::vector<mpz_class> counts(e * e + 1, 0);
    brute_rec(t, 0, counts);
    return IntPoly::from_coeffs(std::move(counts));
}

IntPoly q_poly_recursive(const Tree& t) {
    std::unordered_map<std::string, IntPoly> memo;
    return recursive_memo(t, memo);
}

IntPoly q_poly_state_product(const Tree& t) {
    std::vector<IntPoly> weights;
    collect_vertex_weights(t, weights);
    return poly_product(std::move(weights));
}

IntPoly wedge_product_value(const Tree& t1, const Tree& t2) {
    const unsigned e1 = static_cast<unsigned>(edge_count(t1));
    const unsigned e2 = static_cast<unsigned>(edge_count(t2));
    return q_binomial(e1 + e2, e1) * q_poly_state_product(t1) *
           q_poly_state_product(t2);
}

bool reroot_identity_check(const Tree& t, std::size_t child_index) {
    if (child_index >= t.children.size()) {
        throw domain_error("reroot_identity_check: no such child");
    }
    const std::size_t e = edge_count(t);
    const std::size_t e2 = edge_count(t.children[child_index]);
    const std::size_t e1 = e - 1 - e2;
    const IntPoly lhs =
        q_poly_state_product(t) * q_int(static_cast<unsigned>(e2) + 1);
    const IntPoly rhs = q_poly_state_product(reroot_to_child(t, child_index)) *
                        q_int(static_cast<unsigned>(e1) + 1);
    return lhs == rhs;
}

CyclotomicFactorization q_poly_factored(const Tree& t) {
    std::map<unsigned, long> exps;
    collect_factored_weights(t, exps);
    CyclotomicFactorization fac;
    for (const auto& [d, e] : exps) {
        if (e != 0) fac.factors.emplace_back(d, static_cast<unsigned>(e));
    }
    if (fac.expand() != q_poly_state_product(t)) {
        throw invariant_error("q_poly_factored: re-expansion mismatch");
    }
    return fac;
}

SignedCycFactors q_prime_factored(const Tree& t) {
    std::map<unsigned, long> exps;
    collect_factored_weights(t, exps);
    const unsigned e = static_cast<unsigned>(edge_count(t));
    for (unsigned d = 2; d <= e; ++d) {
        exps[d] -= e / d;
    }
    SignedCycFactors out;
    for (const auto& [d, mult] : exps) {
        if (mult != 0) out.emplace_back(d, mult);
    }
    return out;
}

}  // namespace qpluck
