#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qpluck/poly.hpp"
#include "qpluck/tree.hpp"

namespace qpluck {

// Structural facts about a tree's polynomial, measured and predicted.
struct PropertyReport {
    std::int64_t degree = 0;
    std::int64_t predicted_degree = 0;
    mpz_class c0;
    mpz_class cN;
    mpz_class c1;
    std::int64_t predicted_c1 = 0;
    bool palindromic = false;
    bool unimodal = false;
    bool strictly_unimodal = false;

    bool consistent() const {
        return degree == predicted_degree && c0 == 1 && cN == 1 &&
               c1 == predicted_c1 && palindromic && unimodal;
    }

    bool operator==(const PropertyReport& o) const {
        return degree == o.degree && predicted_degree == o.predicted_degree &&
               c0 == o.c0 && cN == o.cN && c1 == o.c1 &&
               predicted_c1 == o.predicted_c1 &&
               palindromic == o.palindromic && unimodal == o.unimodal &&
               strictly_unimodal == o.strictly_unimodal;
    }
};

bool is_palindromic(const IntPoly& p);

// Coefficients never rise again once they have strictly fallen.
bool is_unimodal(const IntPoly& p);

// Strict rise, then an optional central plateau of exactly two equal
// coefficients, then strict fall.
bool is_strictly_unimodal(const IntPoly& p);

// Sum over vertices of (child_count - 1), counting only vertices with
// children. Throws domain_error for the one-vertex tree.
std::int64_t predicted_c1(const Tree& t);

// Sum over vertices of sum_{i<j} E_i E_j with E_i = edge_count(child_i) + 1.
std::int64_t predicted_degree(const Tree& t);

PropertyReport analyze(const Tree& t);
PropertyReport analyze_poly(const Tree& t, const IntPoly& value);

// Reports for a batch of trees, in input order. The first variant fans the
// loop out with OpenMP; the serial variant is the reference it is checked
// against.
std::vector<PropertyReport> analyze_trees(std::span<const Tree> trees);
std::vector<PropertyReport> analyze_trees_serial(std::span<const Tree> trees);

}  // namespace qpluck
