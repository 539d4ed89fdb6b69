#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qpluck/analysis.hpp"
#include "qpluck/errors.hpp"
#include "qpluck/graph.hpp"
#include "qpluck/plucking.hpp"
#include "qpluck/quantum_plane.hpp"
#include "qpluck/treegen.hpp"

namespace {

using nlohmann::json;
using qpluck::IntPoly;
using qpluck::Tree;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json envelope(const std::string& command, json input, json result) {
    return json{{"command", command},
                {"input", std::move(input)},
                {"result", std::move(result)}};
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json report_json(const qpluck::PropertyReport& r) {
    return json{{"degree", r.degree},
                {"predicted_degree", r.predicted_degree},
                {"c0", r.c0.get_str()},
                {"cN", r.cN.get_str()},
                {"c1", r.c1.get_str()},
                {"predicted_c1", r.predicted_c1},
                {"palindromic", r.palindromic},
                {"unimodal", r.unimodal},
                {"strictly_unimodal", r.strictly_unimodal}};
}

std::string report_text(const qpluck::PropertyReport& r, const IntPoly& value) {
    std::ostringstream out;
    out << "degree " << r.degree << " (predicted " << r.predicted_degree
        << "); c0 " << r.c0 << "; cN " << r.cN << "; c1 " << r.c1
        << " (predicted " << r.predicted_c1 << "); c2 " << value.coeff(2)
        << "\npalindromic " << (r.palindromic ? "yes" : "no") << "; unimodal "
        << (r.unimodal ? "yes" : "no") << "; strictly unimodal "
        << (r.strictly_unimodal ? "yes" : "no");
    return out.str();
}

// One tree per line; blank lines and '#' comment lines are skipped.
std::vector<std::string> read_tree_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
            line.pop_back();
        }
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(line.substr(first));
    }
    return out;
}

std::vector<std::string> gather_inputs(const std::string& tree_arg,
                                       const std::string& file_arg) {
    if (!tree_arg.empty() && !file_arg.empty()) {
        throw usage_error("give a tree or --file, not both");
    }
    if (!tree_arg.empty()) return {tree_arg};
    if (!file_arg.empty()) return read_tree_lines(file_arg);
    throw usage_error("no input: pass a tree or --file");
}

struct ComputeOpts {
    std::string tree;
    std::string file;
    std::string alg = "state";
    std::size_t brute_cap = qpluck::kBruteForceEdgeCap;
};

IntPoly compute_with(const Tree& t, const std::string& alg,
                     std::size_t brute_cap) {
    if (alg == "brute") return qpluck::q_poly_bruteforce(t, brute_cap);
    if (alg == "recursive") return qpluck::q_poly_recursive(t);
    if (alg == "state") return qpluck::q_poly_state_product(t);
    // "all": the closed form, cross-checked by whichever other routes are
    // affordable at this size.
    const IntPoly value = qpluck::q_poly_state_product(t);
    if (qpluck::edge_count(t) <= 16 &&
        qpluck::q_poly_recursive(t) != value) {
        throw qpluck::invariant_error("compute: recursive route disagrees");
    }
    if (qpluck::edge_count(t) <= brute_cap &&
        qpluck::q_poly_bruteforce(t, brute_cap) != value) {
        throw qpluck::invariant_error("compute: brute-force route disagrees");
    }
    return value;
}

int run_compute(const ComputeOpts& opts, const std::string& format) {
    for (const std::string& text : gather_inputs(opts.tree, opts.file)) {
        const Tree t = qpluck::parse_tree(text);
        const IntPoly value = compute_with(t, opts.alg, opts.brute_cap);
        if (format == "json") {
            emit(envelope("compute", text,
                          json{{"polynomial", value.decimal_coeffs()},
                               {"text", value.to_text()},
                               {"degree", value.degree().value_or(0)},
                               {"edges", qpluck::edge_count(t)}}));
        } else {
            std::cout << value.to_text() << "\n";
        }
    }
    return 0;
}

struct VerifyOpts {
    std::string tree;
    std::string file;
    std::size_t brute_cap = qpluck::kBruteForceEdgeCap;
};

struct Check {
    std::string name;
    bool ok;
};

std::vector<Check> verify_tree(const Tree& t, const IntPoly& value,
                               const qpluck::PropertyReport& r,
                               std::size_t brute_cap) {
    std::vector<Check> checks;
    const std::size_t e = qpluck::edge_count(t);
    checks.push_back({"degree_formula", r.degree == r.predicted_degree});
    checks.push_back({"constant_term_is_1", r.c0 == 1});
    checks.push_back({"top_term_is_1", r.cN == 1});
    bool positive = true;
    for (std::size_t i = 0; i < value.size(); ++i) {
        positive = positive && value.coeff(i) > 0;
    }
    checks.push_back({"positive_coefficients", positive});
    checks.push_back({"c1_formula", r.c1 == r.predicted_c1});
    checks.push_back({"palindromic", r.palindromic});
    checks.push_back({"unimodal", r.unimodal});
    bool factored_ok = true;
    try {
        qpluck::q_poly_factored(t);
    } catch (const qpluck::invariant_error&) {
        factored_ok = false;
    }
    checks.push_back({"cyclotomic_factorization", factored_ok});
    if (e <= 16) {
        checks.push_back(
            {"recursive_agrees", qpluck::q_poly_recursive(t) == value});
    }
    if (e <= brute_cap) {
        checks.push_back(
            {"bruteforce_agrees",
             qpluck::q_poly_bruteforce(t, brute_cap) == value});
    }
    bool embedding = true;
    for (std::uint32_t seed = 1; seed <= 3; ++seed) {
        const Tree p = qpluck::permute_children(t, seed);
        const IntPoly other = e <= 12 ? qpluck::q_poly_recursive(p)
                                      : qpluck::q_poly_state_product(p);
        embedding = embedding && other == value;
    }
    checks.push_back({"embedding_independence", embedding});
    bool reroot = true;
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        reroot = reroot && qpluck::reroot_identity_check(t, i);
    }
    checks.push_back({"change_of_root", reroot});
    return checks;
}

int run_verify(const VerifyOpts& opts, const std::string& format) {
    bool all_ok = true;
    for (const std::string& text : gather_inputs(opts.tree, opts.file)) {
        const Tree t = qpluck::parse_tree(text);
        const IntPoly value = qpluck::q_poly_state_product(t);
        const auto report = qpluck::analyze_poly(t, value);
        const auto checks = verify_tree(t, value, report, opts.brute_cap);
        bool tree_ok = true;
        for (const Check& c : checks) tree_ok = tree_ok && c.ok;
        all_ok = all_ok && tree_ok;
        if (format == "json") {
            json jchecks = json::array();
            for (const Check& c : checks) {
                jchecks.push_back(json{{"name", c.name}, {"ok", c.ok}});
            }
            emit(envelope("verify", text,
                          json{{"report", report_json(report)},
                               {"polynomial", value.decimal_coeffs()},
                               {"checks", std::move(jchecks)},
                               {"all_ok", tree_ok}}));
        } else {
            std::cout << "tree " << text << "\nQ = " << value.to_text() << "\n"
                      << report_text(report, value) << "\n";
            for (const Check& c : checks) {
                std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << "\n";
            }
            std::cout << (tree_ok ? "all checks passed" : "CHECKS FAILED")
                      << "\n";
        }
    }
    return all_ok ? 0 : 3;
}

struct ExpandOpts {
    unsigned k = 0;
    unsigned n = 0;
    std::uint64_t cap = qpluck::kWordCap;
};

int run_expand(const ExpandOpts& opts, const std::string& format) {
    const auto expansion = qpluck::expand_power(opts.k, opts.n, opts.cap);
    bool theorem_ok = true;
    for (const auto& [mono, value] : expansion.terms) {
        theorem_ok =
            theorem_ok && value == qpluck::q_multinomial(mono.exponents);
    }
    if (format == "json") {
        json terms = json::array();
        for (const auto& [mono, value] : expansion.terms) {
            terms.push_back(json{{"exponents", mono.exponents},
                                 {"polynomial", value.decimal_coeffs()},
                                 {"text", value.to_text()}});
        }
        emit(envelope("expand", json{{"k", opts.k}, {"n", opts.n}},
                      json{{"terms", std::move(terms)},
                           {"theorem_ok", theorem_ok}}));
    } else {
        for (const auto& [mono, value] : expansion.terms) {
            std::cout << mono.to_text() << ": " << value.to_text() << "\n";
        }
        std::cout << "multinomial theorem: " << (theorem_ok ? "ok" : "FAILED")
                  << "\n";
    }
    return theorem_ok ? 0 : 3;
}

struct FactorOpts {
    std::string tree;
    bool qprime = false;
};

int run_factor(const FactorOpts& opts, const std::string& format) {
    const Tree t = qpluck::parse_tree(opts.tree);
    const auto fac = qpluck::q_poly_factored(t);  // re-expands internally
    if (format == "json") {
        json factors = json::array();
        for (const auto& [d, mult] : fac.factors) {
            factors.push_back(json{{"index", d}, {"multiplicity", mult}});
        }
        json result{{"factors", std::move(factors)},
                    {"text", fac.to_text()},
                    {"reexpansion_ok", true}};
        if (opts.qprime) {
            json qprime = json::array();
            for (const auto& [d, mult] : qpluck::q_prime_factored(t)) {
                qprime.push_back(json{{"index", d}, {"multiplicity", mult}});
            }
            result["qprime"] = std::move(qprime);
        }
        emit(envelope("factor", opts.tree, std::move(result)));
    } else {
        std::cout << fac.to_text() << "\nreexpansion: ok\n";
        if (opts.qprime) {
            std::cout << "qprime: "
                      << qpluck::signed_factors_to_text(
                             qpluck::q_prime_factored(t))
                      << "\n";
        }
    }
    return 0;
}

struct GraphOpts {
    std::string path;
    std::size_t cap = qpluck::kSpanningTreeCap;
};

int run_graph(const GraphOpts& opts, const std::string& format) {
    std::ifstream in(opts.path);
    if (!in) throw usage_error("cannot open " + opts.path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto g = qpluck::parse_graph(buffer.str());
    const auto invariant = qpluck::graph_invariant(g, opts.cap);
    const mpz_class count = qpluck::spanning_tree_count(g);
    if (format == "json") {
        json entries = json::array();
        for (const auto& [value, mult] : invariant.entries) {
            entries.push_back(json{{"polynomial", value.decimal_coeffs()},
                                   {"text", value.to_text()},
                                   {"multiplicity", mult}});
        }
        emit(envelope("graph", opts.path,
                      json{{"vertex_count", g.vertex_count},
                           {"edge_count", g.edges.size()},
                           {"base", g.base},
                           {"spanning_trees", count.get_str()},
                           {"invariant", std::move(entries)}}));
    } else {
        std::cout << "vertices " << g.vertex_count << ", edges "
                  << g.edges.size() << ", base " << g.base << "\n"
                  << "spanning trees: " << count << "\n"
                  << "invariant: " << invariant.to_text() << "\n";
    }
    return 0;
}

struct ScanOpts {
    std::size_t max_edges = 0;
    std::size_t cap = 10;
    std::string predicate = "all";
};

int run_scan(const ScanOpts& opts, const std::string& format) {
    if (opts.max_edges > opts.cap) {
        throw qpluck::resource_error(
            "scan: max_edges exceeds the cap; raise --cap to acknowledge the "
            "exponential cost");
    }
    std::size_t scanned = 0;
    json jtrees = json::array();
    std::size_t matched = 0;
    for (std::size_t e = 0; e <= opts.max_edges; ++e) {
        const auto trees = qpluck::enumerate_plane_trees(e);
        const auto reports = qpluck::analyze_trees(trees);
        scanned += trees.size();
        for (std::size_t i = 0; i < trees.size(); ++i) {
            const auto& r = reports[i];
            const bool keep =
                opts.predicate == "all" ||
                (opts.predicate == "strictly-unimodal" &&
                 r.strictly_unimodal) ||
                (opts.predicate == "not-strictly-unimodal" &&
                 !r.strictly_unimodal);
            if (!keep) continue;
            matched += 1;
            const std::string text = qpluck::serialize_tree(trees[i]);
            if (format == "json") {
                jtrees.push_back(
                    json{{"tree", text}, {"report", report_json(r)}});
            } else {
                std::cout << text << " degree=" << r.degree
                          << " c1=" << r.c1
                          << " strictly_unimodal="
                          << (r.strictly_unimodal ? "yes" : "no") << "\n";
            }
        }
    }
    if (format == "json") {
        emit(envelope(
            "scan",
            json{{"max_edges", opts.max_edges}, {"predicate", opts.predicate}},
            json{{"scanned", scanned},
                 {"matched", matched},
                 {"trees", std::move(jtrees)}}));
    } else {
        std::cout << "scanned " << scanned << " trees, matched " << matched
                  << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plucking polynomial toolkit"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads (never changes results)")
        ->check(CLI::PositiveNumber);

    ComputeOpts copts;
    auto* compute = app.add_subcommand(
        "compute", "evaluate the polynomial of a rooted plane tree");
    compute->add_option("tree", copts.tree, "tree like ((())())");
    compute->add_option("--file", copts.file, "file with one tree per line")
        ->check(CLI::ExistingFile);
    compute->add_option("--alg", copts.alg, "evaluation route")
        ->check(CLI::IsMember({"state", "recursive", "brute", "all"}));
    compute->add_option("--brute-cap", copts.brute_cap,
                        "edge cap for the brute-force route (costly!)");

    VerifyOpts vopts;
    auto* verify =
        app.add_subcommand("verify", "run the full invariant suite on a tree");
    verify->add_option("tree", vopts.tree, "tree like ((())())");
    verify->add_option("--file", vopts.file, "file with one tree per line")
        ->check(CLI::ExistingFile);
    verify->add_option("--brute-cap", vopts.brute_cap,
                       "edge cap for the brute-force cross-check");

    ExpandOpts eopts;
    auto* expand = app.add_subcommand(
        "expand", "expand (x1 + ... + xk)^n over the quantum plane");
    expand->add_option("k", eopts.k, "number of variables")->required();
    expand->add_option("n", eopts.n, "power")->required();
    expand->add_option("--cap", eopts.cap,
                       "word cap; raising it can take a very long time");

    FactorOpts fopts;
    auto* factor = app.add_subcommand(
        "factor", "cyclotomic factorization of a tree polynomial");
    factor->add_option("tree", fopts.tree, "tree like ((())())")->required();
    factor->add_flag("--qprime", fopts.qprime,
                     "also print the factored quotient by [E]_q!");

    GraphOpts gopts;
    auto* graph = app.add_subcommand(
        "graph", "polynomial multiset of a graph over its spanning trees");
    graph->add_option("path", gopts.path, "graph file: 'V E B' then edges")
        ->required()
        ->check(CLI::ExistingFile);
    graph->add_option("--cap", gopts.cap,
                      "spanning-tree cap; raising it can take a long time");

    ScanOpts sopts;
    auto* scan = app.add_subcommand(
        "scan", "analyze every plane tree up to a size");
    scan->add_option("max_edges", sopts.max_edges, "largest edge count")
        ->required();
    scan->add_option("--cap", sopts.cap,
                     "edge cap; raising it costs Catalan-number time");
    scan->add_option("--predicate", sopts.predicate, "filter")
        ->check(CLI::IsMember(
            {"all", "strictly-unimodal", "not-strictly-unimodal"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (compute->parsed()) return run_compute(copts, format);
        if (verify->parsed()) return run_verify(vopts, format);
        if (expand->parsed()) return run_expand(eopts, format);
        if (factor->parsed()) return run_factor(fopts, format);
        if (graph->parsed()) return run_graph(gopts, format);
        if (scan->parsed()) return run_scan(sopts, format);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qpluck::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const qpluck::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 1;
    } catch (const qpluck::invariant_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const qpluck::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
