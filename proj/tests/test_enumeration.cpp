#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sesqui/connectivity.hpp"
#include "sesqui/enumeration.hpp"
#include "sesqui/obstructions.hpp"
#include "sesqui/recognition.hpp"
#include "test_util.hpp"

using namespace sesqui;
using namespace testutil;

TEST_CASE("isomorphism class counts") {
    CHECK(generate_graphs(1).size() == 1);
    CHECK(generate_graphs(2).size() == 2);
    CHECK(generate_graphs(3).size() == 4);
    CHECK(generate_graphs(4).size() == 11);
    CHECK(generate_graphs(5).size() == 34);
    CHECK(generate_graphs(6).size() == 156);
}

TEST_CASE("generation bounds") {
    CHECK_THROWS_AS(generate_graphs(0), size_error);
    CHECK_THROWS_AS(generate_graphs(8), size_error);
    CHECK_THROWS_AS(generate_graphs(9, true), size_error);
}

TEST_CASE("generation is isomorph-free and complete") {
    // no two emitted graphs are isomorphic (permutation oracle, order 4)
    auto all4 = generate_graphs(4);
    for (std::size_t a = 0; a < all4.size(); ++a)
        for (std::size_t b = a + 1; b < all4.size(); ++b)
            CHECK_FALSE(iso_bruteforce(all4[a], all4[b]));

    // coverage: the class sizes n!/|Aut| add up to the number of labeled graphs
    std::size_t factorial[6] = {1, 1, 2, 6, 24, 120};
    for (int n = 1; n <= 5; ++n) {
        std::size_t total = 0;
        for (const Graph& g : generate_graphs(n)) total += factorial[n] / automorphism_count(g);
        CHECK(total == std::uint64_t{1} << (n * (n - 1) / 2));
    }
}

TEST_CASE("generation emits canonical forms in canonical order") {
    for (int n = 4; n <= 5; ++n) {
        auto graphs = generate_graphs(n);
        std::uint64_t prev = 0;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            CHECK(canonical_form(graphs[i]) == graphs[i]);
            std::uint64_t key = canonical_key(graphs[i]);
            if (i > 0) CHECK(prev < key);
            prev = key;
        }
    }
}

TEST_CASE("generation is independent of the worker count") {
    auto serial = generate_graphs(5, false, 1);
    auto parallel = generate_graphs(5, false, 4);
    CHECK(serial == parallel);
}

namespace {

void check_matches_catalog(const std::vector<Graph>& found,
                           const std::vector<std::string>& names) {
    REQUIRE(found.size() == names.size());
    std::vector<char> used(names.size(), 0);
    for (const Graph& g : found) {
        bool matched = false;
        for (std::size_t i = 0; i < names.size() && !matched; ++i) {
            if (used[i]) continue;
            Graph rep = names[i][0] == 'C' && std::isdigit((unsigned char)names[i][1])
                            ? cycle_obstruction(std::stoi(names[i].substr(1))).graph
                            : [&] {
                                  for (const auto& e : sporadic_catalog())
                                      if (e.name == names[i]) return e.graph;
                                  throw std::invalid_argument("bad name");
                              }();
            if (are_isomorphic(g, rep)) {
                used[i] = 1;
                matched = true;
            }
        }
        CHECK(matched);
    }
}

}  // namespace

TEST_CASE("minimal non-sesquicographs at orders 4 and 5") {
    CHECK(minimal_non_sesquicographs(4, FilterMode::Naive).minimal_obstructions.empty());

    auto n5 = minimal_non_sesquicographs(5, FilterMode::Naive);
    CHECK(n5.order == 5);
    CHECK(n5.total_graphs == 34);
    check_matches_catalog(n5.minimal_obstructions, {"C5", "house"});

    auto pruned = minimal_non_sesquicographs(5, FilterMode::Pruned);
    CHECK(pruned.minimal_obstructions == n5.minimal_obstructions);
    CHECK(pruned.filter_mode == FilterMode::Pruned);
    CHECK(to_string(pruned.filter_mode) == "pruned");
}

TEST_CASE("minimal non-sesquicographs at order 6 match the catalog") {
    auto n6 = minimal_non_sesquicographs(6, FilterMode::Naive);
    check_matches_catalog(n6.minimal_obstructions,
                          {"C6", "domino", "H1", "H2", "H3", "H4", "H5"});
    auto pruned = minimal_non_sesquicographs(6, FilterMode::Pruned);
    CHECK(pruned.minimal_obstructions == n6.minimal_obstructions);
}

TEST_CASE("structure of the discovered obstructions") {
    for (int n = 5; n <= 6; ++n)
        for (const Graph& g : minimal_non_sesquicographs(n, FilterMode::Naive)
                                  .minimal_obstructions) {
            CHECK(is_2_connected(g));
            CHECK(is_connected(complement(g)));
            bool dichotomy = is_critically_2_connected(g) ||
                             (vertex_connectivity(g) == 2 &&
                              vertex_connectivity(complement(g)) == 1);
            CHECK(dichotomy);
        }
}

TEST_CASE("sieving an external graph list") {
    std::vector<Graph> graphs{cycle_graph(5), house(), path_graph(5), cycle_graph(6)};
    auto report = minimal_among(graphs, FilterMode::Naive);
    CHECK(report.order == 0);  // mixed orders
    CHECK(report.total_graphs == 4);
    REQUIRE(report.minimal_obstructions.size() == 3);
    check_matches_catalog(report.minimal_obstructions, {"C5", "house", "C6"});

    auto same_order = minimal_among({cycle_graph(5), complete_graph(5)}, FilterMode::Naive);
    CHECK(same_order.order == 5);
    CHECK(same_order.minimal_obstructions.size() == 1);
}

TEST_CASE("equivalence harness") {
    auto report = verify_recognition_equivalence(5);
    CHECK(report.total_mismatches == 0);
    CHECK(report.mismatching.empty());
    CHECK(report.total_graphs == 52);
    REQUIRE(report.per_order.size() == 5);
    std::size_t expected[5] = {1, 2, 4, 11, 34};
    for (int n = 1; n <= 5; ++n) {
        CHECK(report.per_order[n - 1].order == n);
        CHECK(report.per_order[n - 1].graphs == expected[n - 1]);
        CHECK(report.per_order[n - 1].mismatches == 0);
    }
    CHECK_THROWS_AS(verify_recognition_equivalence(8), size_error);

    // below order 5 everything is a sesquicograph
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : generate_graphs(n)) CHECK(is_sesquicograph(g));
}

TEST_CASE("closure harness") {
    auto report = verify_closure_properties(5);
    CHECK(report.violations.empty());
    CHECK(report.sesquicographs == 50);  // 52 classes minus C5 and the house
    CHECK(report.deletion_checks > 0);
    CHECK(report.contraction_checks > 0);
}
