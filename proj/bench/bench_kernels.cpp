// Times each parallel kernel against its serial reference and reports the
// ratio. Results are checked for equality while we're at it, so a wrong
// parallel merge shows up here too. Not part of the test suite.
#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qpluck/analysis.hpp"
#include "qpluck/graph.hpp"
#include "qpluck/plucking.hpp"
#include "qpluck/quantum_plane.hpp"
#include "qpluck/treegen.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_call(Fn&& fn) {
    const auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n",
                name, serial, parallel, parallel > 0 ? serial / parallel : 0.0,
                equal ? "outputs equal" : "OUTPUTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP max threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n\n");
#endif

    {
        qpluck::Expansion serial_out, parallel_out;
        const double s =
            time_call([&] { serial_out = qpluck::expand_power_serial(4, 10); });
        const double p =
            time_call([&] { parallel_out = qpluck::expand_power(4, 10); });
        report("expand_power(4, 10)", s, p, serial_out == parallel_out);
    }

    {
        // Dense-ish graph: an 8-cycle with a hub joined to every vertex.
        std::vector<std::pair<unsigned, unsigned>> edges;
        for (unsigned i = 0; i < 8; ++i) {
            edges.push_back({i, (i + 1) % 8});
            edges.push_back({i, 8});
        }
        const auto g = qpluck::SimpleGraph::create(9, edges, 0);
        qpluck::PolynomialMultiset serial_out, parallel_out;
        const double s = time_call(
            [&] { serial_out = qpluck::graph_invariant_serial(g); });
        const double p =
            time_call([&] { parallel_out = qpluck::graph_invariant(g); });
        report(("graph_invariant, " + std::to_string(serial_out.total()) +
                " trees")
                   .c_str(),
               s, p, serial_out == parallel_out);
    }

    {
        const auto trees = qpluck::enumerate_plane_trees(9);
        std::vector<qpluck::PropertyReport> serial_out, parallel_out;
        const double s = time_call(
            [&] { serial_out = qpluck::analyze_trees_serial(trees); });
        const double p =
            time_call([&] { parallel_out = qpluck::analyze_trees(trees); });
        report(("analyze_trees, " + std::to_string(trees.size()) + " trees")
                   .c_str(),
               s, p, serial_out == parallel_out);
    }

    {
        const auto big = qpluck::random_caterpillar(1000, 100, 7);
        qpluck::IntPoly value;
        const double t =
            time_call([&] { value = qpluck::q_poly_state_product(big); });
        std::printf("\nstate product, 1000-edge caterpillar: %.3fs (degree %lld)\n",
                    t, static_cast<long long>(value.degree().value_or(0)));
    }
    return 0;
}
