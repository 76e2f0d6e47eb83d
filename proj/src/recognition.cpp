#include "sesqui/recognition.hpp"

#include <algorithm>
#include <bit>

#include "sesqui/connectivity.hpp"

namespace sesqui {

namespace {

// Decomposes one piece; on failure stores the offending piece in `failed`
// and returns nothing.
std::optional<DecompositionTree> decompose_piece(const Graph& h,
                                                 std::optional<FailurePiece>& failed) {
    DecompositionTree node;
    node.vertices = h.vertices();
    if (h.order() == 1) {
        node.kind = NodeKind::Leaf;
        node.vertex = h.vertices().front();
        return node;
    }

    auto recurse_on = [&](NodeKind kind,
                          const std::vector<VertexSet>& parts) -> std::optional<DecompositionTree> {
        node.kind = kind;
        for (const VertexSet& part : parts) {
            auto child = decompose_piece(induced_subgraph(h, part), failed);
            if (!child) return std::nullopt;
            node.children.push_back(std::move(*child));
        }
        return node;
    };

    auto comps = components(h);
    if (comps.size() > 1) return recurse_on(NodeKind::ZeroSum, comps);

    auto bd = blocks_and_cut_vertices(h);
    if (!bd.cut_vertices.empty()) return recurse_on(NodeKind::OneSum, bd.blocks);

    // h is connected with no cut vertex, so it is 2-connected (or a K2, whose
    // complement is disconnected). Graphs on at most 4 vertices always fall
    // into one of the branches above or this one.
    auto co_comps = components(complement(h));
    if (co_comps.size() > 1) return recurse_on(NodeKind::Join, co_comps);

    failed = FailurePiece{h};
    return std::nullopt;
}

}  // namespace

DecomposeResult decompose_sesquicograph(const Graph& g) {
    if (g.order() < 1)
        throw std::invalid_argument("decompose_sesquicograph: graph must have a vertex");
    std::optional<FailurePiece> failed;
    auto tree = decompose_piece(g, failed);
    if (tree) return std::move(*tree);
    return std::move(*failed);
}

bool is_sesquicograph(const Graph& g) {
    return std::holds_alternative<DecompositionTree>(decompose_sesquicograph(g));
}

namespace {

void check_children(const DecompositionTree& t) {
    if (t.children.size() < 2)
        throw structure_error("internal tree node needs at least two children");
    VertexSet combined;
    for (std::size_t a = 0; a < t.children.size(); ++a) {
        const VertexSet& va = t.children[a].vertices;
        combined.insert(combined.end(), va.begin(), va.end());
        for (std::size_t b = a + 1; b < t.children.size(); ++b) {
            const VertexSet& vb = t.children[b].vertices;
            VertexSet common;
            std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                                  std::back_inserter(common));
            std::size_t allowed = t.kind == NodeKind::OneSum ? 1 : 0;
            if (common.size() > allowed)
                throw structure_error("tree children overlap where they must not");
        }
    }
    std::sort(combined.begin(), combined.end());
    combined.erase(std::unique(combined.begin(), combined.end()), combined.end());
    if (combined != t.vertices)
        throw structure_error("tree node vertex set does not match its children");
}

}  // namespace

Graph evaluate_tree(const DecompositionTree& t) {
    if (t.kind == NodeKind::Leaf) {
        if (t.vertex < 0 || t.vertices != VertexSet{t.vertex})
            throw structure_error("leaf vertex set must be the singleton of its vertex");
        return Graph({t.vertex}, {});
    }
    check_children(t);
    std::vector<Graph> parts;
    for (const auto& c : t.children) parts.push_back(evaluate_tree(c));

    std::vector<std::pair<int, int>> es;
    for (const Graph& p : parts) {
        auto pe = p.edges();
        es.insert(es.end(), pe.begin(), pe.end());
    }
    if (t.kind == NodeKind::Join)
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = a + 1; b < parts.size(); ++b)
                for (int u : parts[a].vertices())
                    for (int v : parts[b].vertices()) es.emplace_back(u, v);
    return Graph(t.vertices, es);
}

bool is_cograph(const Graph& g) {
    int n = g.order();
    // A 4-subset induces P4 exactly when it spans 3 edges with degrees 1,1,2,2.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    std::uint64_t sub = (std::uint64_t{1} << a) | (std::uint64_t{1} << b) |
                                        (std::uint64_t{1} << c) | (std::uint64_t{1} << d);
                    int degs[4], k = 0, edges2 = 0;
                    for (int v : {a, b, c, d}) {
                        degs[k] = std::popcount(g.row(v) & sub);
                        edges2 += degs[k++];
                    }
                    if (edges2 != 6) continue;
                    std::sort(degs, degs + 4);
                    if (degs[0] == 1 && degs[1] == 1 && degs[2] == 2 && degs[3] == 2)
                        return false;
                }
    return true;
}

bool is_2_cograph(const Graph& g) {
    int n = g.order();
    if (n > kCanonicalMaxOrder)
        throw size_error("is_2_cograph supports at most " + std::to_string(kCanonicalMaxOrder) +
                         " vertices");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) < 2) continue;
        VertexSet s;
        for (std::uint64_t m = mask; m; m &= m - 1) s.push_back(g.label_at(std::countr_zero(m)));
        Graph h = induced_subgraph(g, s);
        if (is_2_connected(h) && is_2_connected(complement(h))) return false;
    }
    return true;
}

bool is_2_cograph_by_decomposition(const Graph& g) {
    if (g.order() <= 1) return true;
    auto comps = components(g);
    if (comps.size() > 1) {
        for (const auto& c : comps)
            if (!is_2_cograph_by_decomposition(induced_subgraph(g, c))) return false;
        return true;
    }
    auto bd = blocks_and_cut_vertices(g);
    if (!bd.cut_vertices.empty()) {
        for (const auto& b : bd.blocks)
            if (!is_2_cograph_by_decomposition(induced_subgraph(g, b))) return false;
        return true;
    }
    // g is 2-connected or a K2: complementation is free, so decompose the
    // complement if it decomposes at all.
    Graph co = complement(g);
    auto co_comps = components(co);
    if (co_comps.size() > 1) {
        for (const auto& c : co_comps)
            if (!is_2_cograph_by_decomposition(induced_subgraph(co, c))) return false;
        return true;
    }
    auto co_bd = blocks_and_cut_vertices(co);
    if (!co_bd.cut_vertices.empty()) {
        for (const auto& b : co_bd.blocks)
            if (!is_2_cograph_by_decomposition(induced_subgraph(co, b))) return false;
        return true;
    }
    return false;
}

bool is_sesquicograph_by_subgraph_criterion(const Graph& g) {
    int n = g.order();
    if (n > 8)
        throw size_error("is_sesquicograph_by_subgraph_criterion supports at most 8 vertices");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) < 2) continue;
        VertexSet s;
        for (std::uint64_t m = mask; m; m &= m - 1) s.push_back(g.label_at(std::countr_zero(m)));
        Graph h = induced_subgraph(g, s);
        if (is_2_connected(h) && is_connected(complement(h))) return false;
    }
    return true;
}

ClassificationReport classify(const Graph& g) {
    ClassificationReport report;
    report.is_cograph = is_cograph(g);
    report.is_2_cograph = is_2_cograph(g);
    auto result = decompose_sesquicograph(g);
    if (auto* tree = std::get_if<DecompositionTree>(&result)) {
        report.is_sesquicograph = true;
        report.certificate = std::move(*tree);
    } else {
        report.is_sesquicograph = false;
        report.witness = obstruction_witness(g);
        if (!report.witness)
            throw std::logic_error("classify: rejected graph has no obstruction witness");
    }
    return report;
}

namespace {

const char* kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::Leaf: return "leaf";
        case NodeKind::Join: return "join";
        case NodeKind::ZeroSum: return "zerosum";
        case NodeKind::OneSum: return "onesum";
    }
    return "?";
}

}  // namespace

nlohmann::ordered_json tree_to_json(const DecompositionTree& t) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(t.kind);
    if (t.kind == NodeKind::Leaf) {
        j["vertex"] = t.vertex;
    } else {
        auto& children = j["children"] = nlohmann::ordered_json::array();
        for (const auto& c : t.children) children.push_back(tree_to_json(c));
    }
    return j;
}

std::string tree_to_text(const DecompositionTree& t) {
    if (t.kind == NodeKind::Leaf) return "(leaf " + std::to_string(t.vertex) + ")";
    std::string out = "(";
    out += kind_name(t.kind);
    for (const auto& c : t.children) out += " " + tree_to_text(c);
    return out + ")";
}

namespace {

int dot_node(const DecompositionTree& t, int& next_id, std::string& out) {
    int id = next_id++;
    std::string label;
    if (t.kind == NodeKind::Leaf) {
        label = "leaf " + std::to_string(t.vertex);
    } else {
        label = kind_name(t.kind);
        label += " {";
        for (std::size_t i = 0; i < t.vertices.size(); ++i)
            label += (i ? "," : "") + std::to_string(t.vertices[i]);
        label += "}";
    }
    out += "  n" + std::to_string(id) + " [label=\"" + label + "\"];\n";
    for (const auto& c : t.children) {
        int cid = dot_node(c, next_id, out);
        out += "  n" + std::to_string(id) + " -> n" + std::to_string(cid) + ";\n";
    }
    return id;
}

}  // namespace

std::string tree_to_dot(const DecompositionTree& t) {
    std::string out = "digraph decomposition {\n";
    int next_id = 0;
    dot_node(t, next_id, out);
    out += "}\n";
    return out;
}

}  // namespace sesqui
