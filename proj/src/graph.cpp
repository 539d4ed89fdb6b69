#include "qpluck/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qpluck/errors.hpp"
#include "qpluck/plucking.hpp"
#include "qpluck/treegen.hpp"

namespace qpluck {

namespace {

// Union-find without path compression so merges can be rolled back.
struct RewindableDsu {
    std::vector<unsigned> parent;
    std::vector<unsigned> size;
    std::vector<std::pair<unsigned, unsigned>> log;  // (child root, parent root)

    explicit RewindableDsu(unsigned n) : parent(n), size(n, 1) {
        for (unsigned i = 0; i < n; ++i) parent[i] = i;
    }

    unsigned find(unsigned x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }

    bool unite(unsigned a, unsigned b) {
        unsigned ra = find(a), rb = find(b);
        if (ra == rb) return false;
        if (size[ra] < size[rb]) std::swap(ra, rb);
        parent[rb] = ra;
        size[ra] += size[rb];
        log.emplace_back(rb, ra);
        return true;
    }

    void rewind(std::size_t mark) {
        while (log.size() > mark) {
            auto [child, par] = log.back();
            log.pop_back();
            size[par] -= size[child];
            parent[child] = child;
        }
    }
};

struct Enumerator {
    const SimpleGraph& g;
    std::size_t cap;
    RewindableDsu dsu;
    std::vector<unsigned> chosen;
    std::vector<std::vector<unsigned>> out;

    Enumerator(const SimpleGraph& graph, std::size_t cap_)
        : g(graph), cap(cap_), dsu(graph.vertex_count) {}

    // Can the remaining edges still merge everything into one component?
    bool feasible(std::size_t next) const {
        RewindableDsu probe = dsu;
        unsigned comps = g.vertex_count - static_cast<unsigned>(dsu.log.size());
        for (std::size_t i = next; i < g.edges.size() && comps > 1; ++i) {
            if (probe.unite(g.edges[i].first, g.edges[i].second)) comps -= 1;
        }
        return comps == 1;
    }

    void run(std::size_t next, unsigned comps) {
        if (comps == 1) {
            if (out.size() >= cap) {
                throw resource_error("spanning_trees: more than " +
                                     std::to_string(cap) + " trees");
            }
            out.push_back(chosen);
            return;
        }
        if (next >= g.edges.size() || !feasible(next)) return;
        const auto [u, v] = g.edges[next];
        const std::size_t mark = dsu.log.size();
        if (dsu.unite(u, v)) {
            chosen.push_back(static_cast<unsigned>(next));
            run(next + 1, comps - 1);
            chosen.pop_back();
            dsu.rewind(mark);
            run(next + 1, comps);  // exclude; feasibility rechecked inside
        } else {
            run(next + 1, comps);  // chord of the current contraction
        }
    }
};

void build_subtree(unsigned v, unsigned parent,
                   const std::vector<std::vector<unsigned>>& adj, Tree& node) {
    for (unsigned w : adj[v]) {
        if (w == parent) continue;
        node.children.emplace_back();
        build_subtree(w, v, adj, node.children.back());
    }
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && sgn(m[swap_row][k]) == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

PolynomialMultiset invariant_impl(const SimpleGraph& g, std::size_t cap,
                                  bool parallel) {
    const auto trees = spanning_trees(g, cap);
    const mpz_class expected = spanning_tree_count(g);
    if (mpz_class(static_cast<unsigned long>(trees.size())) != expected) {
        throw invariant_error(
            "graph_invariant: enumeration disagrees with the matrix-tree "
            "count");
    }
    PolynomialMultiset result;
    if (!parallel) {
        for (const auto& ids : trees) {
            result.entries[q_poly_state_product(tree_from_spanning(g, ids))] +=
                1;
        }
        return result;
    }
    std::vector<IntPoly> values(trees.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < trees.size(); ++i) {
        values[i] = q_poly_state_product(tree_from_spanning(g, trees[i]));
    }
    for (auto& v : values) result.entries[std::move(v)] += 1;
    return result;
}

}  // namespace

SimpleGraph SimpleGraph::create(
    unsigned vertex_count, std::vector<std::pair<unsigned, unsigned>> edges,
    unsigned base) {
    if (vertex_count == 0) throw domain_error("graph: no vertices");
    if (base >= vertex_count) throw domain_error("graph: base out of range");
    for (auto& [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            throw domain_error("graph: edge endpoint out of range");
        }
        if (u == v) throw domain_error("graph: loop edge");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw domain_error("graph: parallel edge");
    }
    RewindableDsu dsu(vertex_count);
    unsigned comps = vertex_count;
    for (const auto& [u, v] : edges) {
        if (dsu.unite(u, v)) comps -= 1;
    }
    if (comps != 1) throw domain_error("graph: not connected");
    SimpleGraph g;
    g.vertex_count = vertex_count;
    g.edges = std::move(edges);
    g.base = base;
    return g;
}

SimpleGraph parse_graph(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> data_lines;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string line(text.substr(line_start, line_end - line_start));
        const auto first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] != '#') {
            data_lines.emplace_back(line_start, line);
        }
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }
    if (data_lines.empty()) throw parse_error("graph: empty input", 0);

    auto read_numbers = [](const std::pair<std::size_t, std::string>& entry,
                           std::size_t want) {
        std::istringstream in(entry.second);
        std::vector<long long> nums;
        long long x = 0;
        while (in >> x) {
            if (x < 0) throw parse_error("graph: negative number", entry.first);
            nums.push_back(x);
        }
        if (!in.eof()) throw parse_error("graph: bad token", entry.first);
        if (nums.size() != want) {
            throw parse_error("graph: expected " + std::to_string(want) +
                                  " numbers on line",
                              entry.first);
        }
        return nums;
    };

    const auto header = read_numbers(data_lines[0], 3);
    if (header[0] > 1'000'000 || header[1] > 10'000'000 ||
        header[2] > 1'000'000) {
        throw parse_error("graph: header out of range", data_lines[0].first);
    }
    const auto v = static_cast<unsigned>(header[0]);
    const auto e = static_cast<std::size_t>(header[1]);
    const auto base = static_cast<unsigned>(header[2]);
    if (data_lines.size() != e + 1) {
        throw parse_error("graph: expected " + std::to_string(e) +
                              " edge lines",
                          data_lines.back().first);
    }
    std::vector<std::pair<unsigned, unsigned>> edges;
    edges.reserve(e);
    for (std::size_t i = 1; i <= e; ++i) {
        const auto uv = read_numbers(data_lines[i], 2);
        edges.emplace_back(static_cast<unsigned>(uv[0]),
                           static_cast<unsigned>(uv[1]));
    }
    return SimpleGraph::create(v, std::move(edges), base);
}

std::vector<std::vector<unsigned>> spanning_trees(const SimpleGraph& g,
                                                  std::size_t cap) {
    if (g.vertex_count > kMaxGraphVertices) {
        throw resource_error("spanning_trees: more than " +
                             std::to_string(kMaxGraphVertices) + " vertices");
    }
    Enumerator en(g, cap);
    en.run(0, g.vertex_count);
    return std::move(en.out);
}

mpz_class spanning_tree_count(const SimpleGraph& g) {
    const unsigned n = g.vertex_count;
    if (n == 1) return 1;
    // Laplacian with the base row/column removed.
    std::vector<unsigned> index(n, 0);
    unsigned next = 0;
    for (unsigned v = 0; v < n; ++v) {
        if (v != g.base) index[v] = next++;
    }
    std::vector<std::vector<mpz_class>> m(
        n - 1, std::vector<mpz_class>(n - 1, 0));
    for (const auto& [u, v] : g.edges) {
        if (u != g.base) m[index[u]][index[u]] += 1;
        if (v != g.base) m[index[v]][index[v]] += 1;
        if (u != g.base && v != g.base) {
            m[index[u]][index[v]] -= 1;
            m[index[v]][index[u]] -= 1;
        }
    }
    return bareiss_determinant(std::move(m));
}

Tree tree_from_spanning(const SimpleGraph& g,
                        const std::vector<unsigned>& edge_ids) {
    std::vector<std::vector<unsigned>> adj(g.vertex_count);
    for (unsigned id : edge_ids) {
        const auto& [u, v] = g.edges.at(id);
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    Tree root;
    build_subtree(g.base, g.vertex_count, adj, root);
    return root;
}

std::size_t PolynomialMultiset::total() const {
    std::size_t n = 0;
    for (const auto& [value, mult] : entries) n += mult;
    return n;
}

std::string PolynomialMultiset::to_text() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [value, mult] : entries) {
        if (!first) out += ", ";
        first = false;
        out += value.to_text() + ": " + std::to_string(mult);
    }
    return out + "}";
}

PolynomialMultiset graph_invariant(const SimpleGraph& g, std::size_t cap) {
    return invariant_impl(g, cap, true);
}

PolynomialMultiset graph_invariant_serial(const SimpleGraph& g,
                                          std::size_t cap) {
    return invariant_impl(g, cap, false);
}

SimpleGraph random_connected_graph(unsigned max_vertices, std::uint64_t seed) {
    if (max_vertices < 2) throw domain_error("random graph: need >= 2 vertices");
    std::mt19937_64 gen(seed);
    const unsigned v =
        2 + static_cast<unsigned>(rng_below(gen, max_vertices - 1));
    std::set<std::pair<unsigned, unsigned>> edges;
    for (unsigned w = 1; w < v; ++w) {
        const unsigned u = static_cast<unsigned>(rng_below(gen, w));
        edges.emplace(std::min(u, w), std::max(u, w));
    }
    const std::uint64_t extra = rng_below(gen, v);
    for (std::uint64_t i = 0; i < extra; ++i) {
        const unsigned a = static_cast<unsigned>(rng_below(gen, v));
        const unsigned b = static_cast<unsigned>(rng_below(gen, v));
        if (a != b) edges.emplace(std::min(a, b), std::max(a, b));
    }
    const unsigned base = static_cast<unsigned>(rng_below(gen, v));
    return SimpleGraph::create(
        v, std::vector<std::pair<unsigned, unsigned>>(edges.begin(),
                                                      edges.end()),
        base);
}

}  // namespace qpluck
