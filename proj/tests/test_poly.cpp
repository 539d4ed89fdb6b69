#include <doctest.h>

#include <random>
#include <vector>

#include "qpluck/errors.hpp"
#include "qpluck/poly.hpp"

using qpluck::IntPoly;

namespace {

IntPoly P(const std::vector<long>& cs) {
    std::vector<mpz_class> v(cs.begin(), cs.end());
    return IntPoly::from_coeffs(std::move(v));
}

// Definition-level convolution, the reference every multiply route is held to.
IntPoly naive_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> res(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            res[i + j] += a.coeff(i) * b.coeff(j);
        }
    }
    return IntPoly::from_coeffs(std::move(res));
}

IntPoly random_poly(std::mt19937_64& gen, std::size_t len, bool negatives,
                    unsigned coef_bits) {
    std::vector<mpz_class> cs(len);
    for (auto& c : cs) {
        mpz_class x = 0;
        for (unsigned b = 0; b < coef_bits; b += 32) {
            x <<= 32;
            x += static_cast<unsigned long>(gen() & 0xffffffffu);
        }
        if (negatives && (gen() & 1)) x = -x;
        c = x;
    }
    cs.back() = cs.back() * 2 + 1;  // keep the length exact
    return IntPoly::from_coeffs(std::move(cs));
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("canonical form and degree") {
    IntPoly z;
    CHECK(z.is_zero());
    CHECK(!z.degree().has_value());
    CHECK(z.to_text() == "0");
    CHECK(P({0, 0, 0}).is_zero());
    const IntPoly p = P({1, 2, 0, 0});
    CHECK(p.size() == 2);
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(7) == 0);
}

TEST_CASE("constants") {
    CHECK(IntPoly(0).is_zero());
    CHECK(IntPoly(5).to_text() == "5");
    CHECK(IntPoly(-3).to_text() == "-3");
    CHECK(IntPoly(1).degree() == 0);
}

TEST_CASE("addition and subtraction") {
    const IntPoly a = P({1, 1});
    const IntPoly b = P({1, -1});
    CHECK((a + b) == P({2}));
    CHECK((a - a).is_zero());
    CHECK((P({1}) + P({0, 0, 1})) == P({1, 0, 1}));
    CHECK((P({1, 0, 1}) - P({0, 0, 1})) == P({1}));
}

TEST_CASE("q_power, shift, all_ones, value at one") {
    CHECK(IntPoly::q_power(0) == IntPoly(1));
    CHECK(IntPoly::q_power(3).to_text() == "q^3");
    CHECK(P({1, 1}).shifted(2).to_text() == "q^2 + q^3");
    CHECK(IntPoly().shifted(5).is_zero());
    CHECK(IntPoly::all_ones(4) == P({1, 1, 1, 1}));
    CHECK(IntPoly::all_ones(0).is_zero());
    CHECK(P({1, 4, 9}).value_at_one() == 14);
    CHECK(IntPoly().value_at_one() == 0);
}

TEST_CASE("multiplication basics") {
    CHECK((P({1, 1}) * P({1, 1})) == P({1, 2, 1}));
    CHECK((P({1, -1}) * P({1, 1})) == P({1, 0, -1}));
    CHECK((P({-1, 1}) * P({1, 1, 1})) == P({-1, 0, 0, 1}));
    CHECK((IntPoly() * P({3, 4})).is_zero());
    CHECK((IntPoly(1) * P({3, 4})) == P({3, 4}));
}

TEST_CASE("every multiply route matches the definition") {
    std::mt19937_64 gen(12345);
    // (length a, length b, signed, coefficient bits) chosen to land in the
    // small, the windowed, and the packed big-integer paths.
    const struct {
        std::size_t la, lb;
        bool neg;
        unsigned bits;
    } cases[] = {
        {3, 4, false, 16},    {20, 15, true, 32},   {120, 140, false, 32},
        {120, 140, true, 64}, {300, 301, true, 32}, {513, 200, false, 128},
        {257, 510, true, 128},
    };
    for (const auto& c : cases) {
        const IntPoly a = random_poly(gen, c.la, c.neg, c.bits);
        const IntPoly b = random_poly(gen, c.lb, c.neg, c.bits);
        CHECK((a * b) == naive_mul(a, b));
        CHECK((b * a) == naive_mul(a, b));
    }
}

TEST_CASE("all-ones operands take the window path and stay exact") {
    std::mt19937_64 gen(999);
    for (std::size_t m : {1, 2, 7, 40}) {
        const IntPoly ones = IntPoly::all_ones(m);
        const IntPoly other = random_poly(gen, 25, true, 48);
        CHECK((ones * other) == naive_mul(ones, other));
        CHECK((other * ones) == naive_mul(ones, other));
        CHECK((ones * ones) == naive_mul(ones, ones));
    }
}

TEST_CASE("ring identities on random operands") {
    std::mt19937_64 gen(77);
    for (int it = 0; it < 10; ++it) {
        const IntPoly a = random_poly(gen, 1 + gen() % 12, true, 32);
        const IntPoly b = random_poly(gen, 1 + gen() % 12, true, 32);
        const IntPoly c = random_poly(gen, 1 + gen() % 12, true, 32);
        CHECK(((a + b) * c) == (a * c + b * c));
        CHECK(((a * b) * c) == (a * (b * c)));
    }
}

TEST_CASE("divide_exact recovers factors") {
    std::mt19937_64 gen(4242);
    for (int it = 0; it < 10; ++it) {
        const IntPoly a = random_poly(gen, 1 + gen() % 20, true, 40);
        const IntPoly b = random_poly(gen, 1 + gen() % 20, true, 40);
        CHECK(qpluck::divide_exact(a * b, b) == a);
    }
    CHECK(qpluck::divide_exact(P({1, 0, 1}), P({1, 0, 1})) == IntPoly(1));
    CHECK(qpluck::divide_exact(IntPoly(), P({1, 1})).is_zero());
}

TEST_CASE("divide_exact rejects inexact quotients") {
    CHECK_THROWS_AS(qpluck::divide_exact(P({1, 1}), IntPoly()),
                    qpluck::not_divisible_error);
    CHECK_THROWS_AS(qpluck::divide_exact(P({1, 0, 1}), P({1, 1})),
                    qpluck::not_divisible_error);
    CHECK_THROWS_AS(qpluck::divide_exact(P({1, 1}), P({1, 1, 1})),
                    qpluck::not_divisible_error);
    CHECK_THROWS_AS(qpluck::divide_exact(P({3, 3}), P({2})),
                    qpluck::not_divisible_error);
    // Every division step succeeds but a remainder survives to the end.
    CHECK_THROWS_AS(qpluck::divide_exact(P({1, 2, 2}), P({2, 1})),
                    qpluck::not_divisible_error);
}

TEST_CASE("poly_product") {
    CHECK(qpluck::poly_product({}) == IntPoly(1));
    CHECK(qpluck::poly_product({P({2, 1})}) == P({2, 1}));
    std::vector<IntPoly> fs = {P({1, 1}), P({1, 1, 1}), P({1, 1, 1, 1}),
                               P({-1, 1}), P({5})};
    IntPoly seq(1);
    for (const auto& f : fs) seq = naive_mul(seq, f);
    CHECK(qpluck::poly_product(fs) == seq);
}

TEST_CASE("poly_less is a strict total order compatible with equality") {
    const std::vector<IntPoly> sorted = {IntPoly(),   IntPoly(1), P({2}),
                                         P({1, 1}),   P({2, 1}),  P({1, 2}),
                                         P({1, 0, 1})};
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = 0; j < sorted.size(); ++j) {
            CHECK(qpluck::poly_less(sorted[i], sorted[j]) == (i < j));
        }
    }
}

TEST_CASE("text rendering") {
    CHECK(P({1, 2, 2, 1}).to_text() == "1 + 2*q + 2*q^2 + q^3");
    CHECK(P({1, -1, 1}).to_text() == "1 - q + q^2");
    CHECK(P({-1, -1}).to_text() == "-1 - q");
    CHECK(P({0, 0, 0, 0, 0, 3}).to_text() == "3*q^5");
    CHECK(P({0, 1}).to_text() == "q");
    CHECK(P({0, -1}).to_text() == "-q");
    CHECK(P({1, 1}).to_text() == "1 + q");
}

TEST_CASE("decimal coefficients") {
    CHECK(P({1, -4, 0, 17}).decimal_coeffs() ==
          std::vector<std::string>({"1", "-4", "0", "17"}));
    CHECK(IntPoly().decimal_coeffs().empty());
}

}  // TEST_SUITE
