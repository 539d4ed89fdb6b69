#include "qpluck/quantum_plane.hpp"

#include <string>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qpluck/errors.hpp"
#include "qpluck/qcalc.hpp"

namespace qpluck {

namespace {

// Per-monomial histograms of inversion counts; monomials are addressed by a
// base-(n+1) code over the exponent vector so the hot path never compares
// vectors.
struct Accumulator {
    std::unordered_map<std::uint64_t, std::size_t> slot_of;
    std::vector<std::vector<std::uint64_t>> hists;
    std::vector<std::vector<unsigned>> exponents;
    std::size_t hist_len = 0;

    void record(std::uint64_t code, const std::vector<unsigned>& counts,
                std::uint64_t inversions) {
        auto [it, fresh] = slot_of.try_emplace(code, hists.size());
        if (fresh) {
            hists.emplace_back(hist_len, 0);
            exponents.push_back(counts);
        }
        hists[it->second][inversions] += 1;
    }
};

struct Walker {
    unsigned k = 0;
    unsigned n = 0;
    std::vector<std::uint64_t> code_step;  // (n+1)^s per symbol s
    std::vector<unsigned> counts;
    Accumulator acc;

    Walker(unsigned k_, unsigned n_) : k(k_), n(n_), counts(k_, 0) {
        acc.hist_len = static_cast<std::size_t>(n) * (n ? n - 1 : 0) / 2 + 1;
        code_step.resize(k);
        std::uint64_t step = 1;
        for (unsigned s = 0; s < k; ++s) {
            code_step[s] = step;
            step *= n + 1;
        }
    }

    std::uint64_t later_symbols(unsigned s) const {
        std::uint64_t c = 0;
        for (unsigned t = s + 1; t < k; ++t) c += counts[t];
        return c;
    }

    void append(unsigned s, std::uint64_t& code, std::uint64_t& inv) {
        inv += later_symbols(s);
        counts[s] += 1;
        code += code_step[s];
    }

    void unappend(unsigned s, std::uint64_t& code, std::uint64_t& inv) {
        code -= code_step[s];
        counts[s] -= 1;
        inv -= later_symbols(s);
    }

    void walk(unsigned depth, std::uint64_t code, std::uint64_t inv) {
        if (depth == n) {
            acc.record(code, counts, inv);
            return;
        }
        for (unsigned s = 0; s < k; ++s) {
            std::uint64_t c = code, v = inv;
            append(s, c, v);
            walk(depth + 1, c, v);
            unappend(s, c, v);
        }
    }
};

bool exceeds_cap(unsigned k, unsigned n, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (total > cap / k) return true;
        total *= k;
    }
    return total > cap;
}

Expansion finish(unsigned k, unsigned n, std::map<Monomial, std::vector<std::uint64_t>>&& merged) {
    Expansion e;
    e.var_count = k;
    e.power = n;
    for (auto& [mono, hist] : merged) {
        std::vector<mpz_class> coeffs(hist.begin(), hist.end());
        e.terms.emplace(mono, IntPoly::from_coeffs(std::move(coeffs)));
    }
    return e;
}

void merge_accumulator(const Accumulator& acc,
                       std::map<Monomial, std::vector<std::uint64_t>>& into) {
    for (const auto& [code, slot] : acc.slot_of) {
        Monomial m{acc.exponents[slot]};
        auto [it, fresh] = into.try_emplace(std::move(m), acc.hist_len, 0);
        auto& hist = it->second;
        for (std::size_t i = 0; i < acc.hist_len; ++i) {
            hist[i] += acc.hists[slot][i];
        }
    }
}

Expansion expand_impl(unsigned k, unsigned n, std::uint64_t word_cap,
                      bool parallel) {
    if (k == 0) throw domain_error("expand_power: need at least one variable");
    if (exceeds_cap(k, n, word_cap)) {
        throw resource_error("expand_power: k^n exceeds the word cap");
    }
    std::map<Monomial, std::vector<std::uint64_t>> merged;
    unsigned prefix_len = 0;
    if (parallel && n > 0) {
#ifdef _OPENMP
        const unsigned want = 4 * static_cast<unsigned>(omp_get_max_threads());
        std::uint64_t tasks = 1;
        while (prefix_len < n && tasks < want) {
            tasks *= k;
            prefix_len += 1;
        }
#endif
    }
    if (prefix_len == 0) {
        Walker w(k, n);
        w.walk(0, 0, 0);
        merge_accumulator(w.acc, merged);
        return finish(k, n, std::move(merged));
    }
    std::uint64_t task_count = 1;
    for (unsigned i = 0; i < prefix_len; ++i) task_count *= k;
    std::vector<Accumulator> results(static_cast<std::size_t>(task_count));
#pragma omp parallel for schedule(dynamic)
    for (std::uint64_t p = 0; p < task_count; ++p) {
        Walker w(k, n);
        std::uint64_t code = 0, inv = 0;
        std::uint64_t rem = p;
        for (unsigned i = 0; i < prefix_len; ++i) {
            std::uint64_t digit = rem;
            for (unsigned j = i + 1; j < prefix_len; ++j) digit /= k;
            digit %= k;
            w.append(static_cast<unsigned>(digit), code, inv);
        }
        w.walk(prefix_len, code, inv);
        results[static_cast<std::size_t>(p)] = std::move(w.acc);
    }
    for (const Accumulator& acc : results) merge_accumulator(acc, merged);
    return finish(k, n, std::move(merged));
}

}  // namespace

std::string Monomial::to_text() const {
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
    }
    return out.empty() ? "1" : out;
}

Expansion expand_power(unsigned k, unsigned n, std::uint64_t word_cap) {
    return expand_impl(k, n, word_cap, true);
}

Expansion expand_power_serial(unsigned k, unsigned n,
                              std::uint64_t word_cap) {
    return expand_impl(k, n, word_cap, false);
}

bool verify_multinomial_theorem(unsigned k, unsigned n,
                                std::uint64_t word_cap) {
    const Expansion e = expand_power(k, n, word_cap);
    std::uint64_t expected_terms = 1;  // compositions of n into k parts
    for (unsigned i = 1; i < k; ++i) {
        expected_terms = expected_terms * (n + i) / i;
    }
    if (e.terms.size() != expected_terms) return false;
    for (const auto& [mono, value] : e.terms) {
        if (value != q_multinomial(mono.exponents)) return false;
    }
    return true;
}

}  // namespace qpluck
