#include "qpluck/tree.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "qpluck/errors.hpp"

namespace qpluck {

namespace {

const Tree& node_at(const Tree& t, const LeafPath& path) {
    const Tree* node = &t;
    for (std::size_t idx : path.indices) {
        if (idx >= node->children.size()) {
            throw domain_error("path leaves the tree");
        }
        node = &node->children[idx];
    }
    return *node;
}

void collect_leaves(const Tree& t, LeafPath& prefix,
                    std::vector<LeafPath>& out) {
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        prefix.indices.push_back(i);
        if (t.children[i].children.empty()) {
            out.push_back(prefix);
        } else {
            collect_leaves(t.children[i], prefix, out);
        }
        prefix.indices.pop_back();
    }
}

struct Lcg31 {
    std::uint32_t x;
    explicit Lcg31(std::uint32_t seed) : x(seed & 0x7fffffffu) {}
    std::uint32_t next() {
        x = (1103515245u * x + 12345u) & 0x7fffffffu;
        return x;
    }
};

void permute_rec(Tree& t, Lcg31& gen) {
    const std::size_t k = t.children.size();
    for (std::size_t i = k; i-- > 1;) {
        const std::size_t j = gen.next() % (i + 1);
        std::swap(t.children[i], t.children[j]);
    }
    for (Tree& c : t.children) permute_rec(c, gen);
}

}  // namespace

Tree parse_tree(std::string_view text) {
    std::vector<Tree> stack;
    Tree root;
    bool have_root = false;
    std::size_t pos = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '(') {
            if (have_root) throw parse_error("text after complete tree", pos);
            stack.emplace_back();
        } else if (c == ')') {
            if (stack.empty()) throw parse_error("unmatched ')'", pos);
            Tree done = std::move(stack.back());
            stack.pop_back();
            if (stack.empty()) {
                root = std::move(done);
                have_root = true;
            } else {
                stack.back().children.push_back(std::move(done));
            }
        } else {
            throw parse_error("unexpected character", pos);
        }
    }
    if (!stack.empty()) throw parse_error("unmatched '('", text.size());
    if (!have_root) throw parse_error("empty input", text.size());
    return root;
}

std::string serialize_tree(const Tree& t) {
    std::string out = "(";
    for (const Tree& c : t.children) out += serialize_tree(c);
    out += ")";
    return out;
}

std::size_t edge_count(const Tree& t) {
    std::size_t n = t.children.size();
    for (const Tree& c : t.children) n += edge_count(c);
    return n;
}

std::vector<LeafPath> leaves(const Tree& t) {
    std::vector<LeafPath> out;
    LeafPath prefix;
    collect_leaves(t, prefix, out);
    return out;
}

std::size_t r_exponent(const Tree& t, const LeafPath& leaf) {
    if (leaf.indices.empty()) {
        throw domain_error("r_exponent: the root is not a leaf");
    }
    std::size_t r = 0;
    const Tree* node = &t;
    for (std::size_t idx : leaf.indices) {
        if (idx >= node->children.size()) {
            throw domain_error("r_exponent: path leaves the tree");
        }
        for (std::size_t j = idx + 1; j < node->children.size(); ++j) {
            r += edge_count(node->children[j]) + 1;
        }
        node = &node->children[idx];
    }
    if (!node->children.empty()) {
        throw domain_error("r_exponent: path does not end at a leaf");
    }
    return r;
}

Tree remove_leaf(const Tree& t, const LeafPath& leaf) {
    if (leaf.indices.empty()) {
        throw domain_error("remove_leaf: the root is not a leaf");
    }
    const Tree& target = node_at(t, leaf);
    if (!target.children.empty()) {
        throw domain_error("remove_leaf: path does not end at a leaf");
    }
    Tree out = t;
    Tree* parent = &out;
    for (std::size_t k = 0; k + 1 < leaf.indices.size(); ++k) {
        parent = &parent->children[leaf.indices[k]];
    }
    parent->children.erase(parent->children.begin() +
                           static_cast<std::ptrdiff_t>(leaf.indices.back()));
    return out;
}

Tree wedge(const std::vector<Tree>& parts) {
    if (parts.empty()) throw domain_error("wedge: no parts");
    Tree out;
    for (const Tree& p : parts) {
        out.children.insert(out.children.end(), p.children.begin(),
                            p.children.end());
    }
    return out;
}

Tree long_branch_tree(const std::vector<std::size_t>& lengths) {
    if (lengths.empty()) throw domain_error("long_branch_tree: no branches");
    Tree out;
    for (std::size_t len : lengths) {
        if (len == 0) throw domain_error("long_branch_tree: zero length");
        Tree branch;
        for (std::size_t k = 1; k < len; ++k) {
            Tree next;
            next.children.push_back(std::move(branch));
            branch = std::move(next);
        }
        out.children.push_back(std::move(branch));
    }
    return out;
}

Tree star(std::size_t rays) {
    Tree out;
    out.children.resize(rays);
    return out;
}

Tree permute_children(const Tree& t, std::uint32_t seed) {
    Tree out = t;
    Lcg31 gen(seed);
    permute_rec(out, gen);
    return out;
}

Tree reroot_to_child(const Tree& t, std::size_t child_index) {
    if (child_index >= t.children.size()) {
        throw domain_error("reroot_to_child: no such child");
    }
    Tree new_root = t.children[child_index];
    Tree old_root = t;
    old_root.children.erase(old_root.children.begin() +
                            static_cast<std::ptrdiff_t>(child_index));
    new_root.children.push_back(std::move(old_root));
    return new_root;
}

Tree canonical_form(const Tree& t) {
    Tree out;
    std::vector<std::pair<std::string, Tree>> keyed;
    keyed.reserve(t.children.size());
    for (const Tree& c : t.children) {
        Tree canon = canonical_form(c);
        keyed.emplace_back(serialize_tree(canon), std::move(canon));
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, child] : keyed) out.children.push_back(std::move(child));
    return out;
}

}  // namespace qpluck
