#include "sesqui/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace sesqui {

namespace {

// Connectivity of the sub-adjacency restricted to `alive` (dense index mask).
bool mask_connected(const Graph& g, std::uint64_t alive) {
    if (alive == 0) return true;
    std::uint64_t seen = alive & (~alive + 1);  // lowest alive vertex
    for (;;) {
        std::uint64_t grow = 0;
        for (std::uint64_t m = seen; m; m &= m - 1)
            grow |= g.row(std::countr_zero(m));
        grow = (grow & alive) | seen;
        if (grow == seen) break;
        seen = grow;
    }
    return seen == alive;
}

}  // namespace

std::vector<VertexSet> components(const Graph& g) {
    int n = g.order();
    std::vector<VertexSet> out;
    std::vector<char> visited(n, 0);
    for (int s = 0; s < n; ++s) {
        if (visited[s]) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        visited[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(g.label_at(u));
            for (std::uint64_t r = g.row(u); r; r &= r - 1) {
                int v = std::countr_zero(r);
                if (!visited[v]) {
                    visited[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    int n = g.order();
    if (n == 0) return true;
    return mask_connected(g, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

BlockDecomposition blocks_and_cut_vertices(const Graph& g) {
    int n = g.order();
    BlockDecomposition out;
    std::vector<int> disc(n, 0), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    auto emit_block = [&](std::size_t from) {
        VertexSet block;
        for (std::size_t k = from; k < edge_stack.size(); ++k) {
            block.push_back(g.label_at(edge_stack[k].first));
            block.push_back(g.label_at(edge_stack[k].second));
        }
        edge_stack.resize(from);
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        out.blocks.push_back(std::move(block));
    };

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = ++timer;
        int children = 0;
        for (std::uint64_t r = g.row(u); r; r &= r - 1) {
            int v = std::countr_zero(r);
            if (v == parent) continue;
            if (disc[v] == 0) {
                ++children;
                std::size_t mark = edge_stack.size();
                edge_stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent != -1) is_cut[u] = 1;
                    emit_block(mark);
                }
            } else if (disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
        if (parent == -1 && children > 1) is_cut[u] = 1;
    };

    for (int s = 0; s < n; ++s) {
        if (disc[s] != 0) continue;
        if (g.row(s) == 0) {
            disc[s] = ++timer;
            out.blocks.push_back({g.label_at(s)});
        } else {
            dfs(s, -1);
        }
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    for (int i = 0; i < n; ++i)
        if (is_cut[i]) out.cut_vertices.push_back(g.label_at(i));
    return out;
}

bool is_2_connected(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    return blocks_and_cut_vertices(g).cut_vertices.empty();
}

int vertex_connectivity(const Graph& g) {
    int n = g.order();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    std::uint64_t full = (std::uint64_t{1} << n) - 1;
    bool complete = true;
    for (int i = 0; i < n && complete; ++i)
        complete = g.row(i) == (full & ~(std::uint64_t{1} << i));
    if (complete) return n - 1;
    for (int t = 1; t <= n - 2; ++t) {
        // all t-subsets of dense indices, Gosper's hack
        std::uint64_t cut = (std::uint64_t{1} << t) - 1;
        while (cut <= full) {
            if ((cut & full) == cut && !mask_connected(g, full & ~cut)) return t;
            std::uint64_t c = cut & (~cut + 1);
            std::uint64_t r = cut + c;
            cut = (((cut ^ r) >> 2) / c) | r;
        }
    }
    return n - 1;
}

bool is_critically_2_connected(const Graph& g) {
    if (!is_2_connected(g)) return false;
    for (int v : g.vertices())
        if (is_2_connected(delete_vertex(g, v))) return false;
    return true;
}

}  // namespace sesqui
