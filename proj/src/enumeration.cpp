#include "sesqui/enumeration.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <thread>
#include <unordered_set>

#include "sesqui/connectivity.hpp"
#include "sesqui/obstructions.hpp"
#include "sesqui/recognition.hpp"

namespace sesqui {

std::string to_string(FilterMode mode) {
    return mode == FilterMode::Naive ? "naive" : "pruned";
}

namespace {

// Runs fn(first, last, worker) over a partition of [0, count).
template <typename Fn>
void run_partitioned(std::uint64_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count < 2) {
        fn(std::uint64_t{0}, count, 0);
        return;
    }
    int workers = static_cast<int>(std::min<std::uint64_t>(jobs, count));
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t lo = count * w / workers;
        std::uint64_t hi = count * (w + 1) / workers;
        threads.emplace_back([&fn, lo, hi, w] { fn(lo, hi, w); });
    }
    for (auto& t : threads) t.join();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<Graph> generate_graphs(int n, bool allow_order_8, int jobs) {
    if (n < 1) throw size_error("generate_graphs: order must be at least 1");
    if (n > 8) throw size_error("generate_graphs: order above 8 is not supported");
    if (n == 8 && !allow_order_8)
        throw size_error("generate_graphs: order 8 sweeps 2^28 graphs; pass the explicit flag");

    const int pair_count = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pair_count;

    // pairs in packing order; pair p occupies bit pair_count-1-p
    std::array<std::pair<int, int>, 32> pairs{};
    int p = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs[p++] = {i, j};

    std::vector<std::unordered_set<std::uint64_t>> locals(std::max(jobs, 1));
    run_partitioned(total, jobs, [&](std::uint64_t lo, std::uint64_t hi, int worker) {
        auto& keys = locals[worker];
        std::array<std::uint16_t, 16> rows{};
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            rows.fill(0);
            for (std::uint64_t m = mask; m; m &= m - 1) {
                int bitpos = std::countr_zero(m);
                auto [i, j] = pairs[pair_count - 1 - bitpos];
                rows[i] |= static_cast<std::uint16_t>(1u << j);
                rows[j] |= static_cast<std::uint16_t>(1u << i);
            }
            keys.insert(detail::canonical_bits(n, rows.data()));
        }
    });

    std::vector<std::uint64_t> keys;
    for (auto& local : locals) keys.insert(keys.end(), local.begin(), local.end());
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    std::vector<Graph> out;
    out.reserve(keys.size());
    for (std::uint64_t bits : keys) out.push_back(graph_from_bits(n, bits));
    return out;
}

namespace {

bool passes_dichotomy_prefilter(const Graph& g) {
    if (is_critically_2_connected(g)) return true;
    return vertex_connectivity(g) == 2 && vertex_connectivity(complement(g)) == 1;
}

bool is_minimal_non_sesquicograph(const Graph& g) {
    if (is_sesquicograph(g)) return false;
    for (int v : g.vertices())
        if (!is_sesquicograph(delete_vertex(g, v))) return false;
    return true;
}

EnumerationReport sieve(const std::vector<Graph>& graphs, FilterMode mode, int order, int jobs) {
    auto start = std::chrono::steady_clock::now();
    EnumerationReport report;
    report.order = order;
    report.total_graphs = graphs.size();
    report.filter_mode = mode;

    std::vector<char> keep(graphs.size(), 0);
    run_partitioned(graphs.size(), jobs, [&](std::uint64_t lo, std::uint64_t hi, int) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            const Graph& g = graphs[i];
            if (mode == FilterMode::Pruned && !passes_dichotomy_prefilter(g)) continue;
            keep[i] = is_minimal_non_sesquicograph(g);
        }
    });
    for (std::size_t i = 0; i < graphs.size(); ++i)
        if (keep[i]) report.minimal_obstructions.push_back(canonical_form(graphs[i]));
    std::sort(report.minimal_obstructions.begin(), report.minimal_obstructions.end(),
              [](const Graph& a, const Graph& b) { return canonical_key(a) < canonical_key(b); });
    report.elapsed_seconds = seconds_since(start);
    return report;
}

}  // namespace

EnumerationReport minimal_non_sesquicographs(int n, FilterMode mode, bool allow_order_8,
                                             int jobs) {
    auto start = std::chrono::steady_clock::now();
    auto graphs = generate_graphs(n, allow_order_8, jobs);
    EnumerationReport report = sieve(graphs, mode, n, jobs);
    report.elapsed_seconds = seconds_since(start);
    return report;
}

EnumerationReport minimal_among(const std::vector<Graph>& graphs, FilterMode mode) {
    int order = graphs.empty() ? 0 : graphs.front().order();
    for (const Graph& g : graphs)
        if (g.order() != order) order = 0;
    return sieve(graphs, mode, order, 1);
}

VerifyReport verify_recognition_equivalence(int n_max, int jobs) {
    if (n_max > 7) throw size_error("verify_recognition_equivalence supports n_max <= 7");
    VerifyReport report;
    for (int n = 1; n <= n_max; ++n) {
        auto graphs = generate_graphs(n, false, jobs);
        std::vector<char> bad(graphs.size(), 0);
        run_partitioned(graphs.size(), jobs, [&](std::uint64_t lo, std::uint64_t hi, int) {
            for (std::uint64_t i = lo; i < hi; ++i) {
                const Graph& g = graphs[i];
                bool by_decomposition = is_sesquicograph(g);
                bool by_witness = !obstruction_witness(g).has_value();
                bool by_criterion = is_sesquicograph_by_subgraph_criterion(g);
                bad[i] = by_decomposition != by_witness || by_decomposition != by_criterion;
            }
        });
        VerifyReport::PerOrder per{n, graphs.size(), 0};
        for (std::size_t i = 0; i < graphs.size(); ++i)
            if (bad[i]) {
                ++per.mismatches;
                report.mismatching.push_back(to_graph6(graphs[i]));
            }
        report.total_graphs += per.graphs;
        report.total_mismatches += per.mismatches;
        report.per_order.push_back(per);
    }
    return report;
}

ClosureReport verify_closure_properties(int n_max, int jobs) {
    if (n_max > 7) throw size_error("verify_closure_properties supports n_max <= 7");
    ClosureReport report;
    for (int n = 1; n <= n_max; ++n) {
        auto graphs = generate_graphs(n, false, jobs);
        for (const Graph& g : graphs) {
            if (!is_sesquicograph(g)) continue;
            ++report.sesquicographs;
            bool violated = false;
            if (g.order() >= 2)
                for (int v : g.vertices()) {
                    ++report.deletion_checks;
                    if (!is_sesquicograph(delete_vertex(g, v))) violated = true;
                }
            for (auto [u, v] : g.edges()) {
                ++report.contraction_checks;
                if (!is_sesquicograph(contract(g, u, v))) violated = true;
            }
            if (violated) report.violations.push_back(to_graph6(g));
        }
    }
    return report;
}

}  // namespace sesqui
