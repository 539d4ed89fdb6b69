#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qpluck/tree.hpp"

namespace qpluck {

// All plane rooted trees with exactly `edges` edges, in a fixed deterministic
// order (by the size of the first child subtree, then recursively). The list
// has Catalan(edges) entries.
std::vector<Tree> enumerate_plane_trees(std::size_t edges);

// Catalan number C(edges); throws domain_error past the uint64 range.
std::uint64_t plane_tree_count(std::size_t edges);

// Uniformly random plane rooted tree with `edges` edges, deterministic in
// `seed` (random balanced-parenthesis word via the cycle lemma).
Tree random_plane_tree(std::size_t edges, std::uint64_t seed);

// Random caterpillar: a descending spine of (edges - legs) edges with `legs`
// single-edge leaves attached to seeded-random spine vertices at
// seeded-random positions among their siblings. Deterministic in `seed`.
// Requires legs < edges.
Tree random_caterpillar(std::size_t edges, std::size_t legs,
                        std::uint64_t seed);

// Uniform integer in [0, bound) drawn from `gen` by rejection sampling, so
// results do not depend on the standard library's distribution internals.
std::uint64_t rng_below(std::mt19937_64& gen, std::uint64_t bound);

}  // namespace qpluck
