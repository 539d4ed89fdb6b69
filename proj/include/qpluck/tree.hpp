#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qpluck {

// Rooted plane tree: the root plus an ordered (left-to-right) list of child
// subtrees. Plane structure is significant for intermediate values; the
// invariant machinery proves the final polynomial ignores it.
struct Tree {
    std::vector<Tree> children;

    bool operator==(const Tree& o) const { return children == o.children; }
};

// Path from the root to a vertex as a list of child indices. The empty path
// addresses the root.
struct LeafPath {
    std::vector<std::size_t> indices;

    bool operator==(const LeafPath& o) const { return indices == o.indices; }
};

// Grammar: tree := "(" tree* ")"; the one-vertex tree is "()". Whitespace
// between tokens is ignored. Throws parse_error with the byte offset of the
// first offending byte.
Tree parse_tree(std::string_view text);
std::string serialize_tree(const Tree& t);

std::size_t edge_count(const Tree& t);

// Paths to all leaves (childless vertices) in left-to-right order. The root
// of the one-vertex tree does not count as a leaf.
std::vector<LeafPath> leaves(const Tree& t);

// Number of edges strictly to the right of the root-to-leaf path: at every
// vertex on the path, the subtrees hanging on later siblings (plus their
// attaching edges). Throws domain_error unless the path addresses a leaf.
std::size_t r_exponent(const Tree& t, const LeafPath& leaf);

// Copy of t with the addressed leaf (and its edge) removed.
Tree remove_leaf(const Tree& t, const LeafPath& leaf);

// Identify the roots of the given trees, concatenating their child lists in
// order. Throws domain_error on an empty list.
Tree wedge(const std::vector<Tree>& parts);

// Root with one descending path of each given length (a "spider"). Lengths
// must be positive and nonempty.
Tree long_branch_tree(const std::vector<std::size_t>& lengths);

// Root with `rays` leaf children.
Tree star(std::size_t rays);

// Reorder children at every vertex using a small explicit generator so runs
// are reproducible by hand: x <- (1103515245*x + 12345) mod 2^31 starting
// from x = seed mod 2^31, Fisher-Yates with j = x mod (i+1) for
// i = k-1 .. 1 drawing one x per step. Vertices are visited in preorder;
// children are permuted before descending, left to right in the new order.
Tree permute_children(const Tree& t, std::uint32_t seed);

// Re-root at the given child of the root: the child keeps its children in
// order and the old root (with its remaining children) is appended as the
// new last child. Throws domain_error on a bad index.
Tree reroot_to_child(const Tree& t, std::size_t child_index);

// Representative of the abstract (non-plane) rooted tree: children sorted
// recursively by serialization. Two plane trees are abstractly equal iff
// their canonical forms are equal.
Tree canonical_form(const Tree& t);

}  // namespace qpluck
