#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sesqui/enumeration.hpp"
#include "sesqui/obstructions.hpp"
#include "sesqui/recognition.hpp"
#include "test_util.hpp"

using namespace sesqui;
using namespace testutil;

namespace {

Graph representative(const std::string& name) {
    if (name.size() > 1 && name[0] == 'C' && std::isdigit(static_cast<unsigned char>(name[1])))
        return cycle_obstruction(std::stoi(name.substr(1))).graph;
    for (const auto& e : sporadic_catalog())
        if (e.name == name) return e.graph;
    throw std::invalid_argument("unknown catalog name " + name);
}

// Checks that the witness mapping is a bijection from the representative onto
// the claimed vertices preserving edges and non-edges.
void check_witness(const Graph& host, const ObstructionWitness& w) {
    Graph rep = representative(w.name);
    REQUIRE(w.mapping.size() == static_cast<std::size_t>(rep.order()));
    VertexSet image;
    for (auto [r, h] : w.mapping) {
        CHECK(rep.has_vertex(r));
        image.push_back(h);
    }
    std::sort(image.begin(), image.end());
    CHECK(image == w.vertices);
    for (int a : rep.vertices())
        for (int b : rep.vertices()) {
            if (a >= b) continue;
            CHECK(rep.adjacent(a, b) == host.adjacent(w.mapping.at(a), w.mapping.at(b)));
        }
}

}  // namespace

TEST_CASE("catalog shape") {
    const auto& cat = sporadic_catalog();
    REQUIRE(cat.size() == 7);
    std::map<std::string, int> edge_counts;
    for (const auto& e : cat) edge_counts[e.name] = e.graph.edge_count();
    CHECK(cat[0].name == "house");
    CHECK(cat[0].graph.order() == 5);
    CHECK(edge_counts["house"] == 6);
    CHECK(edge_counts["domino"] == 7);
    CHECK(edge_counts["H1"] == 10);
    CHECK(edge_counts["H2"] == 9);
    CHECK(edge_counts["H3"] == 8);
    CHECK(edge_counts["H4"] == 9);
    CHECK(edge_counts["H5"] == 9);
    for (const auto& e : cat)
        if (e.name != "house") CHECK(e.graph.order() == 6);

    // entries are pairwise non-isomorphic (permutation oracle)
    for (std::size_t a = 0; a < cat.size(); ++a)
        for (std::size_t b = a + 1; b < cat.size(); ++b)
            CHECK_FALSE(iso_bruteforce(cat[a].graph, cat[b].graph));
    CHECK_FALSE(iso_bruteforce(representative("H2"), representative("H4")));

    // the house is the complement of the 5-vertex path, the domino a chorded hexagon
    CHECK(iso_bruteforce(cat[0].graph, house()));
    CHECK(iso_bruteforce(cat[1].graph, domino()));

    CHECK(cycle_obstruction(5).graph == Graph({1, 2, 3, 4, 5},
                                              {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}));
    CHECK_THROWS_AS(cycle_obstruction(4), std::invalid_argument);
}

TEST_CASE("every catalog entry is an induced-subgraph-minimal non-sesquicograph") {
    auto check_minimal = [](const Graph& g) {
        CHECK_FALSE(is_sesquicograph(g));
        for (int v : g.vertices()) CHECK(is_sesquicograph(delete_vertex(g, v)));
    };
    for (const auto& e : sporadic_catalog()) check_minimal(e.graph);
    for (int k = 5; k <= 9; ++k) check_minimal(cycle_obstruction(k).graph);
}

TEST_CASE("long induced cycle search") {
    CHECK(find_long_induced_cycle(cycle_graph(6)) == VertexSet{0, 1, 2, 3, 4, 5});
    CHECK_FALSE(find_long_induced_cycle(complete_graph(4)).has_value());
    CHECK_FALSE(find_long_induced_cycle(house()).has_value());
    CHECK(find_long_induced_cycle(cycle_graph(7)) == VertexSet{0, 1, 2, 3, 4, 5, 6});
    CHECK_FALSE(find_long_induced_cycle(domino()).has_value());
    CHECK(find_long_induced_cycle(domino(), 4).has_value());  // the two squares
    CHECK_THROWS_AS(find_long_induced_cycle(empty_graph(11)), size_error);

    // smallest cycle wins: a hexagon with an apex joined to opposite corners
    // contains induced 5- and 6-cycles
    auto es = cycle_graph(6).edges();
    es.emplace_back(6, 0);
    es.emplace_back(6, 3);
    Graph theta({0, 1, 2, 3, 4, 5, 6}, es);
    REQUIRE(find_long_induced_cycle(theta, 6).has_value());
    auto cyc = find_long_induced_cycle(theta);
    REQUIRE(cyc.has_value());
    CHECK(cyc->size() == 5);
}

TEST_CASE("sporadic catalog search") {
    Graph h = house();
    auto w = find_catalog_obstruction(h);
    REQUIRE(w.has_value());
    CHECK(w->name == "house");
    CHECK(w->vertices == h.vertices());
    check_witness(h, *w);

    Graph d = domino();
    auto wd = find_catalog_obstruction(d);
    REQUIRE(wd.has_value());
    CHECK(wd->name == "domino");
    CHECK(wd->vertices == d.vertices());
    check_witness(d, *wd);

    CHECK_FALSE(find_catalog_obstruction(cycle_graph(5)).has_value());
    CHECK_FALSE(find_catalog_obstruction(complete_graph(6)).has_value());
}

TEST_CASE("obstruction witnesses") {
    // an embedded house is found inside a larger host
    Graph host = zero_sum(house(), Graph({9}, {}));
    auto w = obstruction_witness(host);
    REQUIRE(w.has_value());
    CHECK(w->name == "house");
    check_witness(host, *w);

    CHECK_FALSE(obstruction_witness(path_graph(7)).has_value());

    auto c7 = obstruction_witness(cycle_graph(7));
    REQUIRE(c7.has_value());
    CHECK(c7->name == "C7");
    check_witness(cycle_graph(7), *c7);

    CHECK_THROWS_AS(obstruction_witness(complete_graph(11)), size_error);
}

TEST_CASE("witness soundness on randomized hosts") {
    std::mt19937 rng(53);
    std::vector<Graph> seeds;
    for (const auto& e : sporadic_catalog()) seeds.push_back(e.graph);
    seeds.push_back(cycle_obstruction(5).graph);
    seeds.push_back(cycle_obstruction(6).graph);
    for (const Graph& seed : seeds) {
        // pad with a random sesquicograph and relabel everything
        int labels = 100;
        Graph pad = random_sesquicograph(rng, 2, labels);
        Graph host = random_permutation_of(zero_sum(seed, pad), rng);
        auto w = obstruction_witness(host);
        REQUIRE(w.has_value());
        check_witness(host, *w);
        CHECK_FALSE(is_sesquicograph(induced_subgraph(host, w->vertices)));
    }
}

TEST_CASE("witness presence matches the recognizer up to order 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : generate_graphs(n)) {
            auto w = obstruction_witness(g);
            CHECK(w.has_value() == !is_sesquicograph(g));
            if (w) check_witness(g, *w);
        }
}

TEST_CASE("witness-free graphs stay witness-free under deletion") {
    for (const Graph& g : generate_graphs(6)) {
        if (obstruction_witness(g)) continue;
        for (int v : g.vertices())
            CHECK_FALSE(obstruction_witness(delete_vertex(g, v)).has_value());
    }
}

TEST_CASE("induced minor containment") {
    CHECK(has_induced_minor(cycle_graph(7), cycle_obstruction(5).graph));
    CHECK(has_induced_minor(domino(), house()));
    CHECK_FALSE(has_induced_minor(cycle_graph(4), cycle_obstruction(5).graph));
    CHECK(has_induced_minor(house(), house()));
    CHECK(has_induced_minor(complete_graph(5), complete_graph(3)));
    CHECK_FALSE(has_induced_minor(path_graph(6), complete_graph(3)));
    CHECK_THROWS_AS(has_induced_minor(empty_graph(9), house()), size_error);
    CHECK_THROWS_AS(has_induced_minor(cycle_graph(7), cycle_obstruction(5).graph, 2),
                    resource_error);
}

TEST_CASE("induced-minor criterion") {
    CHECK_FALSE(is_sesquicograph_by_minor_criterion(cycle_graph(6)));
    CHECK(is_sesquicograph_by_minor_criterion(complete_graph(5)));
    CHECK_FALSE(is_sesquicograph_by_minor_criterion(domino()));
    CHECK_THROWS_AS(is_sesquicograph_by_minor_criterion(empty_graph(8)), size_error);
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : generate_graphs(n))
            CHECK(is_sesquicograph_by_minor_criterion(g) == is_sesquicograph(g));
}

TEST_CASE("witness serialization") {
    auto w = obstruction_witness(cycle_graph(5));
    REQUIRE(w.has_value());
    CHECK(witness_to_json(*w).dump() ==
          R"({"name":"C5","vertices":[0,1,2,3,4],"mapping":{"1":0,"2":1,"3":2,"4":3,"5":4}})");
}
