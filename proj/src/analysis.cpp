#include "qpluck/analysis.hpp"

#include "qpluck/errors.hpp"
#include "qpluck/plucking.hpp"

namespace qpluck {

bool is_palindromic(const IntPoly& p) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n / 2; ++i) {
        if (p.coeff(i) != p.coeff(n - 1 - i)) return false;
    }
    return true;
}

bool is_unimodal(const IntPoly& p) {
    bool falling = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const int c = cmp(p.coeff(i), p.coeff(i + 1));
        if (c > 0) falling = true;
        else if (c < 0 && falling) return false;
    }
    return true;
}

bool is_strictly_unimodal(const IntPoly& p) {
    if (p.size() <= 1) return true;
    std::size_t i = 0;
    while (i + 1 < p.size() && p.coeff(i) < p.coeff(i + 1)) ++i;
    if (i + 1 < p.size() && p.coeff(i) == p.coeff(i + 1)) ++i;  // central pair
    while (i + 1 < p.size() && p.coeff(i) > p.coeff(i + 1)) ++i;
    return i + 1 == p.size();
}

std::int64_t predicted_c1(const Tree& t) {
    if (t.children.empty()) {
        throw domain_error("predicted_c1: tree has no edges");
    }
    std::int64_t sum =
        static_cast<std::int64_t>(t.children.size()) - 1;
    for (const Tree& c : t.children) {
        if (!c.children.empty()) sum += predicted_c1(c);
    }
    return sum;
}

std::int64_t predicted_degree(const Tree& t) {
    std::int64_t sum = 0;
    std::int64_t prefix = 0;
    for (const Tree& c : t.children) {
        const std::int64_t ei = static_cast<std::int64_t>(edge_count(c)) + 1;
        sum += prefix * ei + predicted_degree(c);
        prefix += ei;
    }
    return sum;
}

PropertyReport analyze_poly(const Tree& t, const IntPoly& value) {
    PropertyReport r;
    r.degree = value.degree().value_or(0);
    r.predicted_degree = predicted_degree(t);
    r.c0 = value.coeff(0);
    r.cN = value.coeff(static_cast<std::size_t>(r.degree));
    r.c1 = value.coeff(1);
    r.predicted_c1 = t.children.empty() ? 0 : predicted_c1(t);
    r.palindromic = is_palindromic(value);
    r.unimodal = is_unimodal(value);
    r.strictly_unimodal = is_strictly_unimodal(value);
    return r;
}

PropertyReport analyze(const Tree& t) {
    return analyze_poly(t, q_poly_state_product(t));
}

std::vector<PropertyReport> analyze_trees(std::span<const Tree> trees) {
    std::vector<PropertyReport> out(trees.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < trees.size(); ++i) {
        out[i] = analyze(trees[i]);
    }
    return out;
}

std::vector<PropertyReport> analyze_trees_serial(std::span<const Tree> trees) {
    std::vector<PropertyReport> out(trees.size());
    for (std::size_t i = 0; i < trees.size(); ++i) {
        out[i] = analyze(trees[i]);
    }
    return out;
}

}  // namespace qpluck
