#include "sesqui/obstructions.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

namespace sesqui {

namespace {

Graph chorded_c6(std::initializer_list<std::pair<int, int>> chords) {
    std::vector<std::pair<int, int>> es{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}};
    es.insert(es.end(), chords.begin(), chords.end());
    return Graph({1, 2, 3, 4, 5, 6}, es);
}

Graph house_graph() {
    return Graph({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {2, 5}});
}

}  // namespace

const std::vector<CatalogEntry>& sporadic_catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"house", house_graph()},
        {"domino", chorded_c6({{2, 5}})},
        {"H1", chorded_c6({{2, 5}, {2, 6}, {3, 5}, {3, 6}})},
        {"H2", chorded_c6({{2, 5}, {3, 5}, {3, 6}})},
        {"H3", chorded_c6({{2, 5}, {3, 6}})},
        {"H4", chorded_c6({{2, 5}, {2, 6}, {3, 5}})},
        {"H5", chorded_c6({{2, 4}, {2, 6}, {4, 6}})},
    };
    return entries;
}

CatalogEntry cycle_obstruction(int k) {
    if (k < 5) throw std::invalid_argument("cycle_obstruction: cycles start at length 5");
    std::vector<std::pair<int, int>> es;
    VertexSet labels;
    for (int i = 1; i <= k; ++i) {
        labels.push_back(i);
        es.emplace_back(i, i % k + 1);
    }
    return {"C" + std::to_string(k), Graph(std::move(labels), es)};
}

nlohmann::ordered_json witness_to_json(const ObstructionWitness& w) {
    nlohmann::ordered_json j;
    j["name"] = w.name;
    j["vertices"] = w.vertices;
    auto& m = j["mapping"] = nlohmann::ordered_json::object();
    for (auto [rep, host] : w.mapping) m[std::to_string(rep)] = host;
    return j;
}

namespace {

void require_witness_bound(const Graph& g, const char* op) {
    if (g.order() > kCanonicalMaxOrder)
        throw size_error(std::string(op) + " supports at most " +
                         std::to_string(kCanonicalMaxOrder) + " vertices");
}

// Visits the size-`size` subsets of dense indices 0..n-1 in lexicographic
// order until fn returns true.
template <typename Fn>
bool for_each_subset(int n, int size, Fn&& fn) {
    if (size > n) return false;
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
        if (fn(pick)) return true;
        int i = size - 1;
        while (i >= 0 && pick[i] == n - size + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
}

bool induces_chordless_cycle(const Graph& g, const std::vector<int>& pick) {
    std::uint64_t sub = 0;
    for (int v : pick) sub |= std::uint64_t{1} << v;
    for (int v : pick)
        if (std::popcount(g.row(v) & sub) != 2) return false;
    // 2-regular with |E| = |V|; connected <=> a single cycle
    std::uint64_t seen = std::uint64_t{1} << pick[0];
    for (;;) {
        std::uint64_t grow = seen;
        for (std::uint64_t m = seen; m; m &= m - 1) grow |= g.row(std::countr_zero(m)) & sub;
        if (grow == seen) break;
        seen = grow;
    }
    return seen == sub;
}

// Deterministic isomorphism from rep onto the subgraph of g induced on
// `hosts`; rep vertices are matched in label order against ascending host
// candidates. Assumes the two graphs are isomorphic.
std::map<int, int> extract_mapping(const Graph& rep, const Graph& g, const VertexSet& hosts) {
    int k = rep.order();
    std::vector<int> assign(k, -1);
    std::vector<char> used(k, 0);

    auto consistent = [&](int r, int h) {
        for (int p = 0; p < r; ++p) {
            bool e1 = (rep.row(p) >> r) & 1;
            bool e2 = g.adjacent(hosts[assign[p]], hosts[h]);
            if (e1 != e2) return false;
        }
        return true;
    };
    std::vector<int> stack;
    int r = 0, start = 0;
    while (r < k) {
        int h = start;
        while (h < k && (used[h] || !consistent(r, h))) ++h;
        if (h == k) {
            if (r == 0) throw std::logic_error("extract_mapping: graphs are not isomorphic");
            --r;
            start = assign[r] + 1;
            used[assign[r]] = 0;
            assign[r] = -1;
            continue;
        }
        assign[r] = h;
        used[h] = 1;
        ++r;
        start = 0;
    }
    std::map<int, int> out;
    for (int i = 0; i < k; ++i) out[rep.label_at(i)] = hosts[assign[i]];
    return out;
}

struct CatalogIndex {
    const CatalogEntry* entry;
    std::vector<int> degrees;  // sorted
    std::uint64_t key;
};

const std::vector<CatalogIndex>& sporadic_index() {
    static const std::vector<CatalogIndex> index = [] {
        std::vector<CatalogIndex> out;
        for (const auto& e : sporadic_catalog()) {
            std::vector<int> d;
            for (int v : e.graph.vertices()) d.push_back(e.graph.degree(v));
            std::sort(d.begin(), d.end());
            out.push_back({&e, std::move(d), canonical_key(e.graph)});
        }
        return out;
    }();
    return index;
}

}  // namespace

std::optional<VertexSet> find_long_induced_cycle(const Graph& g, int min_len) {
    require_witness_bound(g, "find_long_induced_cycle");
    int n = g.order();
    for (int size = min_len; size <= n; ++size) {
        VertexSet found;
        bool hit = for_each_subset(n, size, [&](const std::vector<int>& pick) {
            if (!induces_chordless_cycle(g, pick)) return false;
            for (int v : pick) found.push_back(g.label_at(v));
            return true;
        });
        if (hit) return found;
    }
    return std::nullopt;
}

std::optional<ObstructionWitness> find_catalog_obstruction(const Graph& g) {
    require_witness_bound(g, "find_catalog_obstruction");
    int n = g.order();
    for (int size = 5; size <= std::min(n, 6); ++size) {
        std::optional<ObstructionWitness> found;
        for_each_subset(n, size, [&](const std::vector<int>& pick) {
            VertexSet hosts;
            for (int v : pick) hosts.push_back(g.label_at(v));
            Graph h = induced_subgraph(g, hosts);
            std::vector<int> degs;
            for (int v : hosts) degs.push_back(h.degree(v));
            std::sort(degs.begin(), degs.end());
            std::uint64_t hkey = 0;
            bool have_key = false;
            for (const auto& cand : sporadic_index()) {
                if (cand.entry->graph.order() != size || cand.degrees != degs) continue;
                if (!have_key) {
                    hkey = canonical_key(h);
                    have_key = true;
                }
                if (cand.key != hkey) continue;
                found = ObstructionWitness{cand.entry->name, hosts,
                                           extract_mapping(cand.entry->graph, g, hosts)};
                return true;
            }
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

std::optional<ObstructionWitness> obstruction_witness(const Graph& g) {
    require_witness_bound(g, "obstruction_witness");
    if (auto cyc = find_long_induced_cycle(g)) {
        int k = static_cast<int>(cyc->size());
        // walk the cycle from its least vertex toward the smaller neighbour
        Graph h = induced_subgraph(g, *cyc);
        std::map<int, int> mapping;
        int start = cyc->front();
        int prev = -1, at = start;
        for (int i = 1; i <= k; ++i) {
            mapping[i] = at;
            auto nb = h.neighbors(at);
            int next = nb[0] == prev ? nb[1] : nb[0];
            if (prev == -1) next = std::min(nb[0], nb[1]);
            prev = at;
            at = next;
        }
        return ObstructionWitness{"C" + std::to_string(k), *cyc, std::move(mapping)};
    }
    return find_catalog_obstruction(g);
}

bool has_induced_minor(const Graph& g, const Graph& h, std::size_t visited_cap) {
    if (g.order() > 8) throw size_error("has_induced_minor supports hosts up to 8 vertices");
    if (h.order() > g.order()) return false;
    const std::uint64_t target = canonical_key(h);
    const int target_order = h.order();

    std::unordered_set<std::uint64_t> visited;
    std::deque<Graph> queue;
    std::uint64_t start = canonical_key(g);
    if (start == target) return true;
    visited.insert(start);
    queue.push_back(canonical_form(g));

    auto offer = [&](const Graph& next) {
        std::uint64_t key = canonical_key(next);
        if (key == target) return true;
        if (next.order() >= target_order && visited.insert(key).second) {
            if (visited.size() > visited_cap)
                throw resource_error("has_induced_minor: visited-set cap exceeded");
            queue.push_back(canonical_form(next));
        }
        return false;
    };

    while (!queue.empty()) {
        Graph cur = std::move(queue.front());
        queue.pop_front();
        if (cur.order() <= target_order) continue;
        for (int v : cur.vertices())
            if (offer(delete_vertex(cur, v))) return true;
        for (auto [u, v] : cur.edges())
            if (offer(contract(cur, u, v))) return true;
    }
    return false;
}

bool is_sesquicograph_by_minor_criterion(const Graph& g) {
    if (g.order() > 7)
        throw size_error("is_sesquicograph_by_minor_criterion supports at most 7 vertices");
    std::vector<Graph> targets{cycle_obstruction(5).graph};
    for (const auto& e : sporadic_catalog())
        if (e.name != "domino") targets.push_back(e.graph);
    for (const Graph& t : targets)
        if (has_induced_minor(g, t)) return false;
    return true;
}

}  // namespace sesqui
