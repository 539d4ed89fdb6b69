#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpluck/poly.hpp"
#include "qpluck/tree.hpp"

namespace qpluck {

inline constexpr std::size_t kSpanningTreeCap = 100'000;
inline constexpr unsigned kMaxGraphVertices = 16;

// Connected simple graph with a distinguished base vertex. Edges are stored
// normalized (u < v), sorted, and duplicate-free; edge indices elsewhere
// refer to this order.
struct SimpleGraph {
    unsigned vertex_count = 0;
    std::vector<std::pair<unsigned, unsigned>> edges;
    unsigned base = 0;

    // Validates ranges, rejects loops / parallel edges / disconnected input
    // (domain_error).
    static SimpleGraph create(unsigned vertex_count,
                              std::vector<std::pair<unsigned, unsigned>> edges,
                              unsigned base);
};

// Text format: first data line "V E B", then E lines "u v" (0-based).
// '#' starts a comment line; blank lines are skipped. parse_error carries
// the byte offset of the offending line.
SimpleGraph parse_graph(std::string_view text);

// Every spanning tree as a sorted list of edge indices, enumerated by
// include/exclude recursion over edges with connectivity pruning, in a fixed
// deterministic order. Throws resource_error past `cap` trees or
// kMaxGraphVertices vertices.
std::vector<std::vector<unsigned>> spanning_trees(
    const SimpleGraph& g, std::size_t cap = kSpanningTreeCap);

// Number of spanning trees by the matrix-tree theorem: determinant of the
// base-reduced Laplacian via fraction-free (Bareiss) elimination.
mpz_class spanning_tree_count(const SimpleGraph& g);

// Plane tree of a spanning tree rooted at the base, children ordered by
// ascending vertex index.
Tree tree_from_spanning(const SimpleGraph& g,
                        const std::vector<unsigned>& edge_ids);

// Multiset of polynomials keyed by a strict total order.
struct PolynomialMultiset {
    std::map<IntPoly, std::size_t, PolyLess> entries;

    std::size_t total() const;
    std::string to_text() const;  // "{1: 2, 1 + q: 1}"
    bool operator==(const PolynomialMultiset& o) const {
        return entries == o.entries;
    }
};

// Multiset of the tree polynomial over all spanning trees rooted at the
// base. The plain variant fans trees out with OpenMP; the serial variant is
// its reference. Both cross-check the enumeration size against the
// matrix-tree count (invariant_error on mismatch).
PolynomialMultiset graph_invariant(const SimpleGraph& g,
                                   std::size_t cap = kSpanningTreeCap);
PolynomialMultiset graph_invariant_serial(const SimpleGraph& g,
                                          std::size_t cap = kSpanningTreeCap);

// Seeded random connected simple graph with 2..max_vertices vertices
// (random spanning tree plus a few extra edges) and a random base.
SimpleGraph random_connected_graph(unsigned max_vertices, std::uint64_t seed);

}  // namespace qpluck
