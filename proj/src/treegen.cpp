#include "qpluck/treegen.hpp"

#include <algorithm>
#include <string>

#include "qpluck/errors.hpp"

namespace qpluck {

namespace {

// First-child decomposition: a tree with e >= 1 edges is a first child
// subtree with e1 - 1 edges hanging on the root plus the remaining tree with
// e - e1 edges.
void enumerate_into(std::size_t edges, std::vector<std::vector<Tree>>& memo) {
    if (edges < memo.size()) return;
    for (std::size_t e = memo.size(); e <= edges; ++e) {
        std::vector<Tree> out;
        if (e == 0) {
            out.emplace_back();
        } else {
            for (std::size_t e1 = 1; e1 <= e; ++e1) {
                for (const Tree& first : memo[e1 - 1]) {
                    for (const Tree& rest : memo[e - e1]) {
                        Tree t;
                        t.children.reserve(rest.children.size() + 1);
                        t.children.push_back(first);
                        t.children.insert(t.children.end(),
                                          rest.children.begin(),
                                          rest.children.end());
                        out.push_back(std::move(t));
                    }
                }
            }
        }
        memo.push_back(std::move(out));
    }
}

}  // namespace

std::vector<Tree> enumerate_plane_trees(std::size_t edges) {
    std::vector<std::vector<Tree>> memo;
    enumerate_into(edges, memo);
    return std::move(memo[edges]);
}

std::uint64_t plane_tree_count(std::size_t edges) {
    if (edges > 36) throw domain_error("plane_tree_count: result overflows");
    std::vector<std::uint64_t> cat(edges + 1, 0);
    cat[0] = 1;
    for (std::size_t e = 1; e <= edges; ++e) {
        for (std::size_t e1 = 1; e1 <= e; ++e1) {
            cat[e] += cat[e1 - 1] * cat[e - e1];
        }
    }
    return cat[edges];
}

std::uint64_t rng_below(std::mt19937_64& gen, std::uint64_t bound) {
    if (bound == 0) throw domain_error("rng_below: empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return x % bound;
}

Tree random_plane_tree(std::size_t edges, std::uint64_t seed) {
    if (edges == 0) return Tree{};
    std::mt19937_64 gen(seed);
    // Random arrangement of edges+1 up-steps and edges down-steps; the cycle
    // lemma gives exactly one rotation whose every proper prefix sum is
    // positive. Dropping its leading up-step leaves a uniformly random
    // balanced word, i.e. the child-list part of a serialized tree.
    const std::size_t n = 2 * edges + 1;
    std::vector<int> steps(n, -1);
    for (std::size_t i = 0; i <= edges; ++i) steps[i] = 1;
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j =
            static_cast<std::size_t>(rng_below(gen, static_cast<std::uint64_t>(i + 1)));
        std::swap(steps[i], steps[j]);
    }
    long long sum = 0, best = 0;
    std::size_t cut = 0;  // last position attaining the minimum prefix sum
    for (std::size_t i = 0; i < n; ++i) {
        sum += steps[i];
        if (sum <= best) {
            best = sum;
            cut = i + 1;
        }
    }
    std::string text = "(";
    for (std::size_t i = 1; i < n; ++i) {
        text += steps[(cut + i) % n] == 1 ? '(' : ')';
    }
    text += ")";
    return parse_tree(text);
}

Tree random_caterpillar(std::size_t edges, std::size_t legs,
                        std::uint64_t seed) {
    if (legs >= edges) {
        throw domain_error("random_caterpillar: legs must be < edges");
    }
    const std::size_t spine = edges - legs;
    std::mt19937_64 gen(seed);
    std::vector<std::size_t> legs_at(spine, 0);
    for (std::size_t l = 0; l < legs; ++l) {
        legs_at[rng_below(gen, spine)] += 1;
    }
    // Build from the bottom of the spine upward, splicing each vertex's legs
    // around its spine child at random positions.
    Tree below;  // spine vertex `spine` (the tip leaf)
    for (std::size_t depth = spine; depth-- > 0;) {
        Tree node;
        node.children.push_back(std::move(below));
        for (std::size_t l = 0; l < legs_at[depth]; ++l) {
            const std::size_t at =
                rng_below(gen, node.children.size() + 1);
            node.children.insert(node.children.begin() +
                                     static_cast<std::ptrdiff_t>(at),
                                 Tree{});
        }
        below = std::move(node);
    }
    return below;
}

}  // namespace qpluck
