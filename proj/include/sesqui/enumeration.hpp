#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sesqui/graph.hpp"

namespace sesqui {

enum class FilterMode { Naive, Pruned };

std::string to_string(FilterMode mode);

struct EnumerationReport {
    int order = 0;
    std::size_t total_graphs = 0;
    std::vector<Graph> minimal_obstructions;  // canonical forms, canonical order
    double elapsed_seconds = 0.0;
    FilterMode filter_mode = FilterMode::Naive;
};

// Exactly one representative per isomorphism class of graphs on n vertices,
// in canonical-form order. Every adjacency bit-vector is generated and
// deduplicated by canonical form; n is limited to 7 unless allow_order_8 is
// set. jobs > 1 partitions the bit-vector sweep; the result is identical
// regardless of the partitioning.
std::vector<Graph> generate_graphs(int n, bool allow_order_8 = false, int jobs = 1);

// Graphs whose every proper one-vertex-deleted subgraph is a sesquicograph
// while the graph itself is not. Pruned mode first screens candidates by the
// connectivity dichotomy (critically 2-connected, or connectivity 2 with
// co-connectivity 1) before running the same per-vertex minimality test; both
// modes return identical sets.
EnumerationReport minimal_non_sesquicographs(int n, FilterMode mode, bool allow_order_8 = false,
                                             int jobs = 1);
// Same minimality sieve over an externally supplied graph list (order is
// taken from the graphs; 0 if mixed or empty).
EnumerationReport minimal_among(const std::vector<Graph>& graphs, FilterMode mode);

struct VerifyReport {
    struct PerOrder {
        int order = 0;
        std::size_t graphs = 0;
        std::size_t mismatches = 0;
    };
    std::vector<PerOrder> per_order;
    std::vector<std::string> mismatching;  // graph6 of disagreeing graphs
    std::size_t total_graphs = 0;
    std::size_t total_mismatches = 0;
};

// For every isomorphism class with 1 <= n <= n_max (n_max <= 7), checks that
// the decomposition recognizer, the induced-subgraph criterion, and the
// obstruction-witness test agree.
VerifyReport verify_recognition_equivalence(int n_max, int jobs = 1);

struct ClosureReport {
    std::size_t sesquicographs = 0;
    std::size_t deletion_checks = 0;
    std::size_t contraction_checks = 0;
    std::vector<std::string> violations;  // graph6 of closure violators
};

// Every one-vertex deletion and every single-edge contraction of a
// sesquicograph must again be a sesquicograph; checked over all classes with
// n <= n_max.
ClosureReport verify_closure_properties(int n_max, int jobs = 1);

}  // namespace sesqui
