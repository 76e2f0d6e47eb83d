#pragma once

#include <vector>

#include "sesqui/graph.hpp"

namespace sesqui {

// Standard block / cut-vertex decomposition. Each block induces a maximal
// 2-connected subgraph, a bridge edge, or an isolated vertex; two blocks
// share at most one vertex and every shared vertex is a cut vertex; the
// blocks cover all vertices and partition the edge set.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;  // sorted lexicographically
    VertexSet cut_vertices;
};

// Partition of the vertex set into maximal connected subsets, ordered by
// least contained label.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

// Depth-first lowpoint computation.
BlockDecomposition blocks_and_cut_vertices(const Graph& g);

// Convention: K1 and K2 are not 2-connected (|V| >= 3 required).
bool is_2_connected(const Graph& g);

// Least t such that deleting some t-subset disconnects the graph, by
// exhaustive subset enumeration; n-1 for complete graphs, 0 for disconnected
// or single-vertex graphs. Exponential; intended for desk-scale graphs.
int vertex_connectivity(const Graph& g);

// 2-connected and every one-vertex deletion fails to be 2-connected.
bool is_critically_2_connected(const Graph& g);

}  // namespace sesqui
