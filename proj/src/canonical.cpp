#include "sesqui/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace sesqui {

namespace detail {

namespace {

// Branch-and-bound over vertex orderings for the lexicographically least
// upper-triangle adjacency bit-vector. Placing a vertex at position k appends
// a k-bit block (its adjacency to positions 0..k-1, position 0 most
// significant), so only candidates whose block is minimal among the unused
// vertices can extend an optimal ordering; an incumbent prefix comparison
// prunes branches that tie early and lose later.
struct CanonSearch {
    int n = 0;
    const std::uint16_t* rows = nullptr;
    std::array<std::uint16_t, 16> best{};
    std::array<std::uint16_t, 16> cur{};
    bool have_best = false;

    // equal_prefix: blocks 0..depth-1 equal the incumbent's. Returns whether
    // the incumbent was replaced inside this subtree.
    bool dfs(int depth, unsigned used, const std::array<std::uint16_t, 16>& block,
             bool equal_prefix) {
        if (depth == n) {
            if (!have_best || !equal_prefix) {
                best = cur;
                have_best = true;
                return true;
            }
            return false;
        }
        std::uint16_t min_block = 0xffff;
        for (int v = 0; v < n; ++v)
            if (!(used & (1u << v))) min_block = std::min(min_block, block[v]);
        if (equal_prefix && min_block > best[depth]) return false;
        bool now_equal = equal_prefix && min_block == best[depth];
        cur[depth] = min_block;
        bool replaced = false;
        for (int v = 0; v < n; ++v) {
            if ((used & (1u << v)) || block[v] != min_block) continue;
            std::array<std::uint16_t, 16> next = block;
            for (int w = 0; w < n; ++w)
                if (!(used & (1u << w)) && w != v)
                    next[w] = static_cast<std::uint16_t>((next[w] << 1) | ((rows[w] >> v) & 1));
            if (dfs(depth + 1, used | (1u << v), next, now_equal)) {
                replaced = true;
                now_equal = true;
            }
        }
        return replaced;
    }
};

}  // namespace

std::uint64_t canonical_bits(int n, const std::uint16_t* rows) {
    if (n <= 1) return 0;
    CanonSearch search;
    search.n = n;
    search.rows = rows;
    // Seed the search with degree-sorted positions so a near-optimal incumbent
    // appears early and the bound bites sooner.
    std::array<int, 16> seed{};
    std::iota(seed.begin(), seed.begin() + n, 0);
    std::stable_sort(seed.begin(), seed.begin() + n,
                     [&](int a, int b) { return std::popcount(unsigned(rows[a])) < std::popcount(unsigned(rows[b])); });
    for (int k = 0; k < n; ++k) {
        std::uint16_t bv = 0;
        for (int i = 0; i < k; ++i)
            bv = static_cast<std::uint16_t>((bv << 1) | ((rows[seed[k]] >> seed[i]) & 1));
        search.best[k] = bv;
    }
    search.have_best = true;

    std::array<std::uint16_t, 16> zero{};
    search.dfs(0, 0, zero, true);

    std::uint64_t packed = 0;
    for (int k = 1; k < n; ++k) packed = (packed << k) | search.best[k];
    return packed;
}

}  // namespace detail

namespace {

void require_canonical_bound(const Graph& g, const char* op) {
    if (g.order() > kCanonicalMaxOrder)
        throw size_error(std::string(op) + " supports at most " +
                         std::to_string(kCanonicalMaxOrder) + " vertices");
}

std::uint64_t canonical_bits_of(const Graph& g) {
    std::array<std::uint16_t, 16> rows{};
    for (int i = 0; i < g.order(); ++i) rows[i] = static_cast<std::uint16_t>(g.row(i));
    return detail::canonical_bits(g.order(), rows.data());
}

}  // namespace

Graph canonical_form(const Graph& g) {
    require_canonical_bound(g, "canonical_form");
    return graph_from_bits(g.order(), canonical_bits_of(g));
}

std::uint64_t canonical_key(const Graph& g) {
    require_canonical_bound(g, "canonical_key");
    return (static_cast<std::uint64_t>(g.order()) << detail::kKeyShift) | canonical_bits_of(g);
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    require_canonical_bound(g, "are_isomorphic");
    require_canonical_bound(h, "are_isomorphic");
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    auto degrees = [](const Graph& x) {
        std::vector<int> d;
        for (int i = 0; i < x.order(); ++i) d.push_back(std::popcount(x.row(i)));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(g) != degrees(h)) return false;
    return canonical_bits_of(g) == canonical_bits_of(h);
}

}  // namespace sesqui
