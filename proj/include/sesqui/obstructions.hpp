#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sesqui/graph.hpp"

namespace sesqui {

// One forbidden graph: a fixed labeled representative together with its name.
// Sporadic entries use vertices 1..6 (1..5 for the house) in cycle order.
struct CatalogEntry {
    std::string name;  // "house", "domino", "H1".."H5", or "Ck"
    Graph graph;
};

// The seven sporadic minimal non-sesquicographs, in witness search order:
// house, domino, H1..H5.
const std::vector<CatalogEntry>& sporadic_catalog();

// The parametric family: the chordless cycle on k >= 5 vertices, labels 1..k.
CatalogEntry cycle_obstruction(int k);

// A vertex subset of a host graph inducing a forbidden graph, plus the
// explicit isomorphism from the catalog representative onto it.
struct ObstructionWitness {
    std::string name;
    VertexSet vertices;           // in the host graph
    std::map<int, int> mapping;   // representative label -> host label

    bool operator==(const ObstructionWitness&) const = default;
};

nlohmann::ordered_json witness_to_json(const ObstructionWitness& w);

// Least vertex subset (by size, then lexicographically) inducing a chordless
// cycle of length >= min_len; hosts up to 10 vertices.
std::optional<VertexSet> find_long_induced_cycle(const Graph& g, int min_len = 5);

// First subset (by size, then lexicographically, then catalog order) inducing
// a graph isomorphic to a sporadic entry.
std::optional<ObstructionWitness> find_catalog_obstruction(const Graph& g);

// A long-induced-cycle witness (named Ck, smallest first) or else a sporadic
// witness; empty exactly when the graph is a sesquicograph.
std::optional<ObstructionWitness> obstruction_witness(const Graph& g);

// Whether h is reachable from g (up to isomorphism) by vertex deletions and
// simple edge contractions. Breadth-first over canonical forms, pruning
// intermediates smaller than h; throws resource_error if the visited set
// would exceed visited_cap, so a capped run never reports a false negative.
bool has_induced_minor(const Graph& g, const Graph& h, std::size_t visited_cap = 1'000'000);

// True iff none of C5, house, H1..H5 is an induced minor of g.
bool is_sesquicograph_by_minor_criterion(const Graph& g);

}  // namespace sesqui
