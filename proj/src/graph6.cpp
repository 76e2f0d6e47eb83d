#include "sesqui/graph.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace sesqui {

namespace {

constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;

// p-th pair of the column-major upper-triangle order.
std::pair<int, int> pair_at(int p) {
    int j = 1;
    while (j * (j - 1) / 2 + j <= p) ++j;
    return {p - j * (j - 1) / 2, j};
}

}  // namespace

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw parse_error("empty graph6 string", 0);
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == kG6Hi)
        throw size_error("graph6 multi-byte size header: only n <= 62 is supported");
    if (c0 < kG6Lo || c0 > kG6Hi) throw parse_error("graph6 size byte out of range", 0);
    int n = c0 - kG6Lo;
    int nbits = n * (n - 1) / 2;
    std::size_t nchars = (nbits + 5) / 6;
    if (text.size() < 1 + nchars)
        throw parse_error("truncated graph6 string: expected " + std::to_string(nchars) +
                              " adjacency bytes",
                          text.size());
    if (text.size() > 1 + nchars)
        throw parse_error("trailing garbage after graph6 data", 1 + nchars);

    std::vector<std::pair<int, int>> es;
    int pos = 0;
    for (std::size_t k = 0; k < nchars; ++k) {
        unsigned char c = static_cast<unsigned char>(text[1 + k]);
        if (c < kG6Lo || c > kG6Hi)
            throw parse_error("graph6 adjacency byte out of range", 1 + k);
        int val = c - kG6Lo;
        for (int b = 5; b >= 0; --b, ++pos) {
            bool on = (val >> b) & 1;
            if (pos >= nbits) {
                if (on) throw parse_error("nonzero graph6 padding bits", 1 + k);
                continue;
            }
            if (on) es.push_back(pair_at(pos));
        }
    }
    VertexSet labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i;
    return Graph(std::move(labels), es);
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > Graph::kMaxOrder)
        throw size_error("to_graph6 supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + kG6Lo));
    int nbits = n * (n - 1) / 2;
    int val = 0, used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            val = (val << 1) | static_cast<int>((g.row(i) >> j) & 1);
            if (++used == 6) {
                out.push_back(static_cast<char>(val + kG6Lo));
                val = 0;
                used = 0;
            }
        }
    if (nbits % 6 != 0) out.push_back(static_cast<char>((val << (6 - used)) + kG6Lo));
    return out;
}

namespace {

struct Token {
    long value;
    std::size_t offset;
};

std::vector<Token> tokenize_edge_list(std::string_view text) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 1'000'000) throw parse_error("edge list number out of range", start);
                ++i;
            }
            toks.push_back({v, start});
        } else {
            throw parse_error(std::string("unexpected character '") + c + "' in edge list", i);
        }
    }
    return toks;
}

}  // namespace

Graph from_edge_list(std::string_view text) {
    auto toks = tokenize_edge_list(text);
    if (toks.size() < 2) throw parse_error("edge list is missing the \"n m\" header", text.size());
    long n = toks[0].value, m = toks[1].value;
    if (n > Graph::kMaxOrder)
        throw size_error("edge list declares " + std::to_string(n) +
                         " vertices; at most 62 are supported");
    if (toks.size() < 2 + 2 * static_cast<std::size_t>(m))
        throw parse_error("truncated edge list: expected " + std::to_string(m) + " edges",
                          text.size());
    if (toks.size() > 2 + 2 * static_cast<std::size_t>(m))
        throw parse_error("trailing garbage after edge list", toks[2 + 2 * m].offset);
    std::vector<std::pair<int, int>> es;
    for (long e = 0; e < m; ++e) {
        const Token& tu = toks[2 + 2 * e];
        const Token& tv = toks[3 + 2 * e];
        if (tu.value >= n || tv.value >= n)
            throw parse_error("edge endpoint out of range", tu.value >= n ? tu.offset : tv.offset);
        if (tu.value == tv.value) throw parse_error("loop edge in edge list", tu.offset);
        es.emplace_back(static_cast<int>(tu.value), static_cast<int>(tv.value));
    }
    VertexSet labels(n);
    for (long i = 0; i < n; ++i) labels[i] = static_cast<int>(i);
    return Graph(std::move(labels), es);
}

std::string to_edge_list(const Graph& g) {
    // relabeled 0..n-1 in label order, edges sorted lexicographically
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if ((g.row(i) >> j) & 1)
                out += std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

}  // namespace sesqui
