#include "qpluck/poly.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <utility>

#include "qpluck/errors.hpp"

namespace qpluck {

namespace {

std::size_t max_coef_bits(const std::vector<mpz_class>& v) {
    std::size_t bits = 0;
    for (const auto& c : v) {
        if (sgn(c) != 0) {
            bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
        }
    }
    return bits;
}

bool all_ones_coeffs(const std::vector<mpz_class>& v) {
    for (const auto& c : v) {
        if (c != 1) return false;
    }
    return !v.empty();
}

// a * (1 + q + ... + q^(m-1)) with a sliding window sum, O(output length)
// bigint additions.
std::vector<mpz_class> mul_by_all_ones(const std::vector<mpz_class>& a,
                                       std::size_t m) {
    const std::size_t la = a.size();
    std::vector<mpz_class> res(la + m - 1);
    mpz_class window = 0;
    for (std::size_t i = 0; i < res.size(); ++i) {
        if (i < la) window += a[i];
        if (i >= m) window -= a[i - m];
        res[i] = window;
    }
    return res;
}

std::vector<mpz_class> mul_schoolbook(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& b) {
    std::vector<mpz_class> res(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0) continue;
            mpz_addmul(res[i + j].get_mpz_t(), a[i].get_mpz_t(),
                       b[j].get_mpz_t());
        }
    }
    return res;
}

// Kronecker substitution for polynomials with nonnegative coefficients:
// pack each polynomial into one big integer with fixed-width byte slots wide
// enough that convolution coefficients cannot overflow into the next slot,
// multiply once with GMP, unpack.
std::vector<mpz_class> mul_kronecker_nonneg(const std::vector<mpz_class>& a,
                                            const std::vector<mpz_class>& b) {
    const std::size_t la = a.size(), lb = b.size();
    const std::size_t term_bits =
        std::bit_width(static_cast<std::uint64_t>(std::min(la, lb)));
    const std::size_t bits = max_coef_bits(a) + max_coef_bits(b) + term_bits;
    const std::size_t w = (bits + 7) / 8;  // slot width in bytes

    auto pack = [w](const std::vector<mpz_class>& v) {
        std::vector<unsigned char> buf(v.size() * w, 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (sgn(v[i]) != 0) {
                mpz_export(buf.data() + i * w, nullptr, -1, 1, 0, 0,
                           v[i].get_mpz_t());
            }
        }
        mpz_class packed;
        mpz_import(packed.get_mpz_t(), buf.size(), -1, 1, 0, 0, buf.data());
        return packed;
    };

    const mpz_class prod = pack(a) * pack(b);
    const std::size_t lc = la + lb - 1;
    std::vector<unsigned char> cbuf(lc * w, 0);
    std::size_t written = 0;
    mpz_export(cbuf.data(), &written, -1, 1, 0, 0, prod.get_mpz_t());

    std::vector<mpz_class> res(lc);
    for (std::size_t i = 0; i < lc; ++i) {
        mpz_import(res[i].get_mpz_t(), w, -1, 1, 0, 0, cbuf.data() + i * w);
    }
    return res;
}

void split_signs(const std::vector<mpz_class>& v, std::vector<mpz_class>& pos,
                 std::vector<mpz_class>& neg) {
    pos.assign(v.size(), 0);
    neg.assign(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) > 0) pos[i] = v[i];
        else if (sgn(v[i]) < 0) neg[i] = -v[i];
    }
}

bool has_negative(const std::vector<mpz_class>& v) {
    return std::any_of(v.begin(), v.end(),
                       [](const mpz_class& c) { return sgn(c) < 0; });
}

void add_into(std::vector<mpz_class>& acc, const std::vector<mpz_class>& v,
              bool subtract) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (subtract) acc[i] -= v[i];
        else acc[i] += v[i];
    }
}

bool is_zero_vec(const std::vector<mpz_class>& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const mpz_class& c) { return sgn(c) == 0; });
}

std::vector<mpz_class> mul_kronecker(const std::vector<mpz_class>& a,
                                     const std::vector<mpz_class>& b) {
    if (!has_negative(a) && !has_negative(b)) {
        return mul_kronecker_nonneg(a, b);
    }
    std::vector<mpz_class> ap, an, bp, bn;
    split_signs(a, ap, an);
    split_signs(b, bp, bn);
    std::vector<mpz_class> res(a.size() + b.size() - 1);
    auto accumulate = [&](const std::vector<mpz_class>& x,
                          const std::vector<mpz_class>& y, bool subtract) {
        if (is_zero_vec(x) || is_zero_vec(y)) return;
        add_into(res, mul_kronecker_nonneg(x, y), subtract);
    };
    accumulate(ap, bp, false);
    accumulate(an, bn, false);
    accumulate(ap, bn, true);
    accumulate(an, bp, true);
    return res;
}

constexpr std::size_t kSchoolbookMaxOps = std::size_t(1) << 14;

}  // namespace

IntPoly::IntPoly(long constant) {
    if (constant != 0) coeffs_.assign(1, mpz_class(constant));
}

IntPoly IntPoly::from_coeffs(std::vector<Coef> coeffs) {
    IntPoly p;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

IntPoly IntPoly::q_power(std::size_t k) {
    IntPoly p;
    p.coeffs_.assign(k + 1, 0);
    p.coeffs_[k] = 1;
    return p;
}

IntPoly IntPoly::all_ones(std::size_t m) {
    IntPoly p;
    p.coeffs_.assign(m, 1);
    return p;
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<std::int64_t> IntPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
}

const IntPoly::Coef& IntPoly::coeff(std::size_t i) const {
    static const Coef zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

IntPoly IntPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) {
        IntPoly p = *this;
        return p;
    }
    IntPoly p;
    p.coeffs_.assign(k, 0);
    p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return p;
}

mpz_class IntPoly::value_at_one() const {
    mpz_class s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    const auto& va = a.coeffs_;
    const auto& vb = b.coeffs_;
    std::vector<mpz_class> res;
    if (all_ones_coeffs(va)) {
        res = mul_by_all_ones(vb, va.size());
    } else if (all_ones_coeffs(vb)) {
        res = mul_by_all_ones(va, vb.size());
    } else if (va.size() * vb.size() <= kSchoolbookMaxOps) {
        res = mul_schoolbook(va, vb);
    } else {
        res = mul_kronecker(va, vb);
    }
    return IntPoly::from_coeffs(std::move(res));
}

std::string IntPoly::to_text() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const mpz_class& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        const mpz_class mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
            first = false;
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) {
                out += mag.get_str();
                out += "*";
            }
            out += "q";
            if (i > 1) {
                out += "^";
                out += std::to_string(i);
            }
        }
    }
    return out;
}

std::vector<std::string> IntPoly::decimal_coeffs() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str());
    return out;
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw not_divisible_error("division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    const std::int64_t da = *a.degree(), db = *b.degree();
    if (da < db) throw not_divisible_error("not divisible: degree too small");
    std::vector<mpz_class> rem(a.coeffs());
    const mpz_class& lead = b.coeff(static_cast<std::size_t>(db));
    std::vector<mpz_class> quot(static_cast<std::size_t>(da - db) + 1);
    for (std::int64_t k = da - db; k >= 0; --k) {
        mpz_class& top = rem[static_cast<std::size_t>(k + db)];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
            throw not_divisible_error("not divisible: nonzero remainder");
        }
        mpz_class qk = top / lead;
        for (std::int64_t j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(k + j)] -=
                qk * b.coeff(static_cast<std::size_t>(j));
        }
        quot[static_cast<std::size_t>(k)] = std::move(qk);
    }
    for (const auto& c : rem) {
        if (sgn(c) != 0) {
            throw not_divisible_error("not divisible: nonzero remainder");
        }
    }
    return IntPoly::from_coeffs(std::move(quot));
}

IntPoly poly_product(std::vector<IntPoly> factors) {
    if (factors.empty()) return IntPoly(1);
    std::multimap<std::size_t, IntPoly> heap;
    for (auto& f : factors) {
        const std::size_t s = f.size();
        heap.emplace(s, std::move(f));
    }
    while (heap.size() > 1) {
        auto it = heap.begin();
        IntPoly x = std::move(it->second);
        heap.erase(it);
        it = heap.begin();
        IntPoly y = std::move(it->second);
        heap.erase(it);
        IntPoly z = x * y;
        const std::size_t s = z.size();
        heap.emplace(s, std::move(z));
    }
    return std::move(heap.begin()->second);
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        const int c = cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace qpluck
