#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sesqui/errors.hpp"

namespace sesqui {

// A set of vertex labels, kept sorted ascending with no duplicates.
using VertexSet = std::vector<int>;

// Labeled simple undirected graph. Vertex labels are small non-negative
// integers. Adjacency is stored as one 64-bit row per vertex over the dense
// 0..n-1 relabeling, with the sorted label vector alongside; complement and
// induced subgraph are word operations on the rows.
//
// Graphs are immutable after construction. All operations below are pure
// functions returning new values, so concurrent use needs no locking.
class Graph {
public:
    static constexpr int kMaxOrder = 62;  // graph6 single-byte header bound

    Graph() = default;
    Graph(VertexSet labels, const std::vector<std::pair<int, int>>& edge_list);

    int order() const { return static_cast<int>(labels_.size()); }
    int edge_count() const;
    const VertexSet& vertices() const { return labels_; }
    bool has_vertex(int label) const;
    bool adjacent(int u, int v) const;
    int degree(int label) const;
    VertexSet neighbors(int label) const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    // Dense view for algorithms: vertex `index` is the index-th smallest label.
    int index_of(int label) const;  // -1 when absent
    int label_at(int index) const { return labels_[index]; }
    std::uint64_t row(int index) const { return adj_[index]; }

    bool operator==(const Graph&) const = default;  // exact labeled equality

private:
    struct unchecked_t {};
    Graph(VertexSet labels, std::vector<std::uint64_t> rows, unchecked_t)
        : labels_(std::move(labels)), adj_(std::move(rows)) {}

    VertexSet labels_;                 // sorted ascending
    std::vector<std::uint64_t> adj_;   // adj_[i] bit j <=> edge {labels_[i], labels_[j]}

    friend Graph complement(const Graph&);
    friend Graph induced_subgraph(const Graph&, const VertexSet&);
    friend Graph graph_from_bits(int, std::uint64_t);
};

// Same vertex set; (u,v) with u != v is an edge of the result iff it is not
// an edge of the input.
Graph complement(const Graph& g);

// Subgraph induced on s (which must be a subset of the vertex set); labels
// are preserved.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph delete_vertex(const Graph& g, int v);

// Disjoint-vertex-set constructors. Label disjointness is the caller's
// burden; the recognizer relabels internally where needed.
Graph join(const Graph& g, const Graph& h);      // union plus all cross edges
Graph zero_sum(const Graph& g, const Graph& h);  // disjoint union
// Identifies v of h with u of g; the merged vertex keeps label u.
Graph one_sum(const Graph& g, int u, const Graph& h, int v);

// Simple contraction of the edge uv: v is removed and u's neighbourhood
// becomes (N(u) u N(v)) \ {u,v}. The result has no loops or parallel edges.
Graph contract(const Graph& g, int u, int v);

// Applies a label bijection; mapping must cover every vertex injectively.
Graph relabel(const Graph& g, const std::map<int, int>& mapping);

// Small named graphs on labels 0..n-1.
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

// Dense upper-triangle bit packing over pairs (i,j), i < j, in column-major
// order (0,1),(0,2),(1,2),(0,3),...; the first pair is the most significant
// bit. graph_from_bits yields labels 0..n-1.
constexpr int kBitsMaxOrder = 11;
std::uint64_t upper_triangle_bits(const Graph& g);
Graph graph_from_bits(int n, std::uint64_t bits);

// graph6 text codec, single-byte size field (n <= 62 only). Bit layout as in
// upper_triangle_bits, 6 bits per character, character value = bits + 63,
// zero padding. to_graph6 relabels vertices 0..n-1 in label order.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Plain edge-list format: first line "n m", then m lines "u v" with 0-based
// labels; blank lines and '#' comments are ignored.
Graph from_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// Canonical relabeling to 0..n-1 such that isomorphic inputs yield identical
// outputs: branch-and-bound over vertex orderings taking the
// lexicographically least upper-triangle adjacency bit-vector. Practical for
// n <= kCanonicalMaxOrder only.
constexpr int kCanonicalMaxOrder = 10;
Graph canonical_form(const Graph& g);
// (order << 55) | upper_triangle_bits(canonical_form(g)); a total order on
// isomorphism classes, used for dedup and memo tables.
std::uint64_t canonical_key(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

namespace detail {
// Canonical packed bits of a dense adjacency given as uint16 rows.
std::uint64_t canonical_bits(int n, const std::uint16_t* rows);
constexpr int kKeyShift = 55;
}  // namespace detail

}  // namespace sesqui
