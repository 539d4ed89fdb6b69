#include <doctest.h>

#include <vector>

#include "qpluck/errors.hpp"
#include "qpluck/qcalc.hpp"
#include "qpluck/quantum_plane.hpp"

using qpluck::expand_power;
using qpluck::expand_power_serial;
using qpluck::Expansion;
using qpluck::IntPoly;
using qpluck::Monomial;

namespace {

IntPoly P(const std::vector<long>& cs) {
    std::vector<mpz_class> v(cs.begin(), cs.end());
    return IntPoly::from_coeffs(std::move(v));
}

const IntPoly& term(const Expansion& e, std::vector<unsigned> exps) {
    return e.terms.at(Monomial{std::move(exps)});
}

}  // namespace

TEST_SUITE("quantum_plane") {

TEST_CASE("(x1 + x2)^2") {
    const Expansion e = expand_power(2, 2);
    REQUIRE(e.terms.size() == 3);
    CHECK(term(e, {2, 0}) == IntPoly(1));
    CHECK(term(e, {1, 1}) == P({1, 1}));
    CHECK(term(e, {0, 2}) == IntPoly(1));
}

TEST_CASE("central coefficient of (x1 + x2)^4") {
    CHECK(term(expand_power(2, 4), {2, 2}) == qpluck::q_binomial(4, 2));
}

TEST_CASE("three variables, power two") {
    const Expansion e = expand_power(3, 2);
    REQUIRE(e.terms.size() == 6);
    CHECK(term(e, {1, 1, 0}) == P({1, 1}));
    CHECK(term(e, {1, 0, 1}) == P({1, 1}));
    CHECK(term(e, {0, 1, 1}) == P({1, 1}));
    CHECK(term(e, {2, 0, 0}) == IntPoly(1));
}

TEST_CASE("degenerate powers") {
    const Expansion zero = expand_power(3, 0);
    REQUIRE(zero.terms.size() == 1);
    CHECK(term(zero, {0, 0, 0}) == IntPoly(1));
    const Expansion one_var = expand_power(1, 6);
    REQUIRE(one_var.terms.size() == 1);
    CHECK(term(one_var, {6}) == IntPoly(1));
    CHECK_THROWS_AS(expand_power(0, 3), qpluck::domain_error);
}

TEST_CASE("multinomial theorem") {
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(qpluck::verify_multinomial_theorem(2, n));
    }
    for (unsigned n = 0; n <= 5; ++n) {
        CHECK(qpluck::verify_multinomial_theorem(3, n));
    }
    CHECK(qpluck::verify_multinomial_theorem(4, 4));
}

TEST_CASE("parallel expansion equals the serial reference") {
    for (const auto& [k, n] : std::vector<std::pair<unsigned, unsigned>>{
             {2, 10}, {3, 5}, {4, 6}, {1, 4}}) {
        CHECK(expand_power(k, n) == expand_power_serial(k, n));
    }
}

TEST_CASE("specializing q to 1 counts the words") {
    const Expansion e = expand_power(3, 4);
    mpz_class total = 0;
    for (const auto& [mono, value] : e.terms) total += value.value_at_one();
    CHECK(total == 81);
}

TEST_CASE("word cap") {
    CHECK_THROWS_AS(expand_power(10, 8), qpluck::resource_error);
    CHECK_THROWS_AS(expand_power(2, 10, 100), qpluck::resource_error);
    CHECK_NOTHROW(expand_power(2, 10, 1024));
}

TEST_CASE("monomial text") {
    CHECK(Monomial{{2, 0, 1}}.to_text() == "x1^2*x3");
    CHECK(Monomial{{0, 0}}.to_text() == "1");
    CHECK(Monomial{{1, 1}}.to_text() == "x1*x2");
}

}  // TEST_SUITE
