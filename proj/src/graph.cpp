#include "sesqui/graph.hpp"

#include <algorithm>
#include <bit>

namespace sesqui {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

void check_label_pool(const VertexSet& labels) {
    if (labels.size() > static_cast<std::size_t>(Graph::kMaxOrder))
        throw size_error("graph order " + std::to_string(labels.size()) +
                         " exceeds the supported bound of " + std::to_string(Graph::kMaxOrder));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0) throw std::invalid_argument("negative vertex label");
        if (i > 0 && labels[i] == labels[i - 1])
            throw std::invalid_argument("duplicate vertex label " + std::to_string(labels[i]));
    }
}

}  // namespace

Graph::Graph(VertexSet labels, const std::vector<std::pair<int, int>>& edge_list) {
    std::sort(labels.begin(), labels.end());
    check_label_pool(labels);
    labels_ = std::move(labels);
    adj_.assign(labels_.size(), 0);
    for (auto [u, v] : edge_list) {
        int i = index_of(u), j = index_of(v);
        if (i < 0 || j < 0)
            throw std::invalid_argument("edge endpoint is not a vertex of the graph");
        if (i == j) throw std::invalid_argument("loop edge " + std::to_string(u));
        adj_[i] |= bit(j);
        adj_[j] |= bit(i);
    }
}

int Graph::edge_count() const {
    int total = 0;
    for (std::uint64_t r : adj_) total += std::popcount(r);
    return total / 2;
}

bool Graph::has_vertex(int label) const { return index_of(label) >= 0; }

int Graph::index_of(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return -1;
    return static_cast<int>(it - labels_.begin());
}

bool Graph::adjacent(int u, int v) const {
    int i = index_of(u), j = index_of(v);
    if (i < 0 || j < 0) throw std::invalid_argument("adjacent: no such vertex");
    return (adj_[i] >> j) & 1;
}

int Graph::degree(int label) const {
    int i = index_of(label);
    if (i < 0) throw std::invalid_argument("degree: no such vertex");
    return std::popcount(adj_[i]);
}

VertexSet Graph::neighbors(int label) const {
    int i = index_of(label);
    if (i < 0) throw std::invalid_argument("neighbors: no such vertex");
    VertexSet out;
    for (std::uint64_t r = adj_[i]; r; r &= r - 1)
        out.push_back(labels_[std::countr_zero(r)]);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < order(); ++i)
        for (int j = i + 1; j < order(); ++j)
            if ((adj_[i] >> j) & 1) out.emplace_back(labels_[i], labels_[j]);
    return out;
}

Graph complement(const Graph& g) {
    int n = g.order();
    std::uint64_t full = n == 0 ? 0 : (bit(n) - 1);
    std::vector<std::uint64_t> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = (~g.adj_[i] & full) & ~bit(i);
    return Graph(g.labels_, std::move(rows), Graph::unchecked_t{});
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    VertexSet keep(s);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> idx(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
        idx[k] = g.index_of(keep[k]);
        if (idx[k] < 0)
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(keep[k]) +
                                        " is not in the host graph");
    }
    std::vector<std::uint64_t> rows(keep.size(), 0);
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b)
            if ((g.adj_[idx[a]] >> idx[b]) & 1) {
                rows[a] |= bit(static_cast<int>(b));
                rows[b] |= bit(static_cast<int>(a));
            }
    return Graph(std::move(keep), std::move(rows), Graph::unchecked_t{});
}

Graph delete_vertex(const Graph& g, int v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("delete_vertex: no such vertex");
    VertexSet keep;
    for (int u : g.vertices())
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

namespace {

std::vector<std::pair<int, int>> merged_edges(const Graph& g, const Graph& h, const char* op) {
    for (int v : h.vertices())
        if (g.has_vertex(v))
            throw std::invalid_argument(std::string(op) + ": vertex sets overlap at " +
                                        std::to_string(v));
    auto es = g.edges();
    auto hs = h.edges();
    es.insert(es.end(), hs.begin(), hs.end());
    return es;
}

VertexSet merged_labels(const Graph& g, const Graph& h) {
    VertexSet labels = g.vertices();
    labels.insert(labels.end(), h.vertices().begin(), h.vertices().end());
    return labels;
}

}  // namespace

Graph zero_sum(const Graph& g, const Graph& h) {
    return Graph(merged_labels(g, h), merged_edges(g, h, "zero_sum"));
}

Graph join(const Graph& g, const Graph& h) {
    auto es = merged_edges(g, h, "join");
    for (int u : g.vertices())
        for (int v : h.vertices()) es.emplace_back(u, v);
    return Graph(merged_labels(g, h), std::move(es));
}

Graph one_sum(const Graph& g, int u, const Graph& h, int v) {
    if (!g.has_vertex(u)) throw std::invalid_argument("one_sum: first graph has no such vertex");
    if (!h.has_vertex(v)) throw std::invalid_argument("one_sum: second graph has no such vertex");
    auto es = merged_edges(g, h, "one_sum");
    for (auto& [a, b] : es) {
        if (a == v) a = u;
        if (b == v) b = u;
    }
    VertexSet labels = g.vertices();
    for (int w : h.vertices())
        if (w != v) labels.push_back(w);
    return Graph(std::move(labels), es);
}

Graph contract(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v)) throw std::invalid_argument("contract: uv is not an edge");
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : g.edges()) {
        if (a == v) a = u;
        if (b == v) b = u;
        if (a != b) es.emplace_back(a, b);
    }
    VertexSet labels;
    for (int w : g.vertices())
        if (w != v) labels.push_back(w);
    return Graph(std::move(labels), es);
}

Graph relabel(const Graph& g, const std::map<int, int>& mapping) {
    VertexSet labels;
    for (int v : g.vertices()) {
        auto it = mapping.find(v);
        if (it == mapping.end())
            throw std::invalid_argument("relabel: mapping misses vertex " + std::to_string(v));
        labels.push_back(it->second);
    }
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : g.edges()) es.emplace_back(mapping.at(a), mapping.at(b));
    return Graph(std::move(labels), es);  // constructor rejects non-injective maps
}

Graph empty_graph(int n) {
    VertexSet labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i;
    return Graph(std::move(labels), {});
}

Graph path_graph(int n) {
    VertexSet labels(n);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) labels[i] = i;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(std::move(labels), es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    Graph p = path_graph(n);
    auto es = p.edges();
    es.emplace_back(0, n - 1);
    return Graph(p.vertices(), es);
}

Graph complete_graph(int n) {
    VertexSet labels(n);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) labels[i] = i;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(std::move(labels), es);
}

std::uint64_t upper_triangle_bits(const Graph& g) {
    int n = g.order();
    if (n > kBitsMaxOrder)
        throw size_error("upper_triangle_bits supports at most " +
                         std::to_string(kBitsMaxOrder) + " vertices");
    std::uint64_t bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits = (bits << 1) | ((g.row(i) >> j) & 1);
    return bits;
}

Graph graph_from_bits(int n, std::uint64_t bits) {
    if (n < 0 || n > kBitsMaxOrder)
        throw size_error("graph_from_bits supports 0.." + std::to_string(kBitsMaxOrder) +
                         " vertices");
    VertexSet labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i;
    std::vector<std::uint64_t> rows(n, 0);
    int total = n * (n - 1) / 2;
    int pos = total;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            --pos;
            if ((bits >> pos) & 1) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
    return Graph(std::move(labels), std::move(rows), Graph::unchecked_t{});
}

}  // namespace sesqui
