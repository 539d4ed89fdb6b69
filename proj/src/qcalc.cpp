#include "qpluck/qcalc.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qpluck/errors.hpp"

namespace qpluck {

namespace {

constexpr unsigned kPascalMaxN = 64;

std::mutex binom_mutex;
std::map<std::pair<unsigned, unsigned>, IntPoly>& binom_cache() {
    static std::map<std::pair<unsigned, unsigned>, IntPoly> cache;
    return cache;
}

std::mutex cyc_mutex;
std::map<unsigned, IntPoly>& cyc_cache() {
    static std::map<unsigned, IntPoly> cache;
    return cache;
}

// binom(n, i) by the recurrence binom(n,i) = binom(n-1,i-1) + q^i binom(n-1,i),
// filled row by row; no division anywhere.
IntPoly binom_pascal(unsigned n, unsigned i) {
    std::vector<IntPoly> row(i + 1);
    row[0] = IntPoly(1);
    for (unsigned r = 1; r <= n; ++r) {
        for (unsigned j = std::min(i, r); j >= 1; --j) {
            row[j] = row[j - 1] + row[j].shifted(j);
        }
    }
    return row[i];
}

std::vector<unsigned> cyclotomic_exponents_binomial(unsigned n, unsigned i) {
    std::vector<unsigned> exps(n + 1, 0);
    for (unsigned d = 2; d <= n; ++d) {
        exps[d] = n / d - i / d - (n - i) / d;
    }
    return exps;
}

IntPoly expand_cyclotomic_exponents(const std::vector<unsigned>& exps) {
    std::vector<IntPoly> factors;
    for (unsigned d = 0; d < exps.size(); ++d) {
        for (unsigned m = 0; m < exps[d]; ++m) factors.push_back(cyclotomic(d));
    }
    return poly_product(std::move(factors));
}

}  // namespace

IntPoly q_int(unsigned n) { return IntPoly::all_ones(n); }

IntPoly q_factorial(unsigned n) {
    std::vector<IntPoly> factors;
    factors.reserve(n);
    for (unsigned m = 1; m <= n; ++m) factors.push_back(q_int(m));
    return poly_product(std::move(factors));
}

IntPoly q_binomial(unsigned n, unsigned i) {
    if (i > n) throw domain_error("q_binomial: i > n");
    if (i == 0 || i == n) return IntPoly(1);
    if (i == 1 || i == n - 1) return q_int(n);
    {
        std::lock_guard<std::mutex> lock(binom_mutex);
        auto it = binom_cache().find({n, i});
        if (it != binom_cache().end()) return it->second;
    }
    IntPoly result = n <= kPascalMaxN
                         ? binom_pascal(n, i)
                         : expand_cyclotomic_exponents(
                               cyclotomic_exponents_binomial(n, i));
    std::lock_guard<std::mutex> lock(binom_mutex);
    return binom_cache().emplace(std::make_pair(n, i), std::move(result))
        .first->second;
}

IntPoly q_multinomial(const std::vector<unsigned>& parts) {
    if (parts.empty()) throw domain_error("q_multinomial: no parts");
    std::vector<IntPoly> factors;
    unsigned total = 0;
    for (unsigned a : parts) {
        total += a;
        if (a != 0 && a != total) factors.push_back(q_binomial(total, a));
    }
    return poly_product(std::move(factors));
}

IntPoly cyclotomic(unsigned d) {
    if (d == 0) throw domain_error("cyclotomic: index must be >= 1");
    std::lock_guard<std::mutex> lock(cyc_mutex);
    auto& cache = cyc_cache();
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // Fill ascending: Ψ_k = (q^k - 1) / Π_{j | k, j < k} Ψ_j.
    for (unsigned k = 1; k <= d; ++k) {
        if (d % k != 0 || cache.count(k)) continue;
        std::vector<IntPoly> divisors;
        for (unsigned j = 1; j < k; ++j) {
            if (k % j == 0) divisors.push_back(cache.at(j));
        }
        IntPoly numerator = IntPoly::q_power(k) - IntPoly(1);
        cache.emplace(k, divide_exact(numerator, poly_product(std::move(divisors))));
    }
    return cache.at(d);
}

IntPoly CyclotomicFactorization::expand() const {
    std::vector<IntPoly> fs;
    for (const auto& [d, mult] : factors) {
        for (unsigned m = 0; m < mult; ++m) fs.push_back(cyclotomic(d));
    }
    return poly_product(std::move(fs));
}

std::string CyclotomicFactorization::to_text() const {
    if (factors.empty()) return "1";
    std::string out;
    for (const auto& [d, mult] : factors) {
        if (!out.empty()) out += " · ";
        out += "Ψ" + std::to_string(d);
        if (mult != 1) out += "^" + std::to_string(mult);
    }
    return out;
}

CyclotomicFactorization factor_q_binomial(unsigned n, unsigned i) {
    if (i > n) throw domain_error("factor_q_binomial: i > n");
    const auto exps = cyclotomic_exponents_binomial(n, i);
    CyclotomicFactorization fac;
    for (unsigned d = 2; d < exps.size(); ++d) {
        if (exps[d] != 0) fac.factors.emplace_back(d, exps[d]);
    }
    if (fac.expand() != q_binomial(n, i)) {
        throw invariant_error("factor_q_binomial: re-expansion mismatch");
    }
    return fac;
}

CyclotomicFactorization factor_q_factorial(unsigned n) {
    CyclotomicFactorization fac;
    for (unsigned d = 2; d <= n; ++d) {
        fac.factors.emplace_back(d, n / d);
    }
    return fac;
}

std::string signed_factors_to_text(const SignedCycFactors& f) {
    std::string out;
    for (const auto& [d, mult] : f) {
        if (mult == 0) continue;
        if (!out.empty()) out += " · ";
        out += "Ψ" + std::to_string(d);
        if (mult != 1) out += "^" + std::to_string(mult);
    }
    return out.empty() ? "1" : out;
}

}  // namespace qpluck
