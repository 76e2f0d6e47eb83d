#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "sesqui/graph.hpp"
#include "sesqui/obstructions.hpp"

namespace sesqui {

enum class NodeKind { Leaf, Join, ZeroSum, OneSum };

// Certificate that a graph is generated from K1 by join, 0-sum, and 1-sum:
// evaluating the tree reproduces the exact labeled input graph. Leaf vertex
// sets are singletons; Join/ZeroSum children partition the node's set; OneSum
// children are the blocks of the node's induced graph and pairwise share at
// most one vertex (a cut vertex).
struct DecompositionTree {
    NodeKind kind = NodeKind::Leaf;
    int vertex = -1;  // Leaf only
    std::vector<DecompositionTree> children;
    VertexSet vertices;

    bool operator==(const DecompositionTree&) const = default;
};

// A 2-connected piece with connected complement (|V| >= 5): the reason a
// graph is not a sesquicograph.
struct FailurePiece {
    Graph piece;

    bool operator==(const FailurePiece&) const = default;
};

using DecomposeResult = std::variant<DecompositionTree, FailurePiece>;

// Recursive worklist decomposition: a single-vertex piece is a Leaf; a
// disconnected piece splits as a ZeroSum over components; a connected piece
// with a cut vertex splits as a OneSum over blocks; a 2-connected piece with
// disconnected complement splits as a Join over the complement's component
// sets; anything else is returned as the FailurePiece.
DecomposeResult decompose_sesquicograph(const Graph& g);
bool is_sesquicograph(const Graph& g);

// Rebuilds the graph a tree certifies. Checks the overlap invariants
// (disjointness, singleton leaves, child counts) and throws structure_error
// on violation.
Graph evaluate_tree(const DecompositionTree& t);

// No 4-subset induces the 4-vertex path.
bool is_cograph(const Graph& g);

// No induced subgraph H with |V(H)| >= 2 has both H and its complement
// 2-connected; brute force over subsets, hosts up to 10 vertices.
bool is_2_cograph(const Graph& g);
// Recursive variant: decompose by components/blocks, switching to the
// complement when the complement decomposes; cross-checked against the
// brute-force test.
bool is_2_cograph_by_decomposition(const Graph& g);

// Every induced subgraph H with |V(H)| >= 2 is not 2-connected or has a
// disconnected complement. Independent oracle for is_sesquicograph; hosts up
// to 8 vertices.
bool is_sesquicograph_by_subgraph_criterion(const Graph& g);

// Verdicts form a chain: cograph => sesquicograph => 2-cograph. Exactly one
// of certificate/witness is present.
struct ClassificationReport {
    bool is_cograph = false;
    bool is_sesquicograph = false;
    bool is_2_cograph = false;
    std::optional<DecompositionTree> certificate;
    std::optional<ObstructionWitness> witness;
};

ClassificationReport classify(const Graph& g);

// {"kind": "leaf"|"join"|"zerosum"|"onesum", "vertex": int (leaf only),
//  "children": [...]}
nlohmann::ordered_json tree_to_json(const DecompositionTree& t);
std::string tree_to_dot(const DecompositionTree& t);
std::string tree_to_text(const DecompositionTree& t);  // one-line s-expression

}  // namespace sesqui
