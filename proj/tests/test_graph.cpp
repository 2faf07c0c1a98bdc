#include <doctest.h>

#include <random>
#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "polybinom/chromatic.hpp"
#include "polybinom/errors.hpp"
#include "polybinom/io.hpp"
#include "polybinom/survey.hpp"

using namespace polybinom;

TEST_CASE("cyclomatic number") {
    CHECK(cyclomatic_number(fixture::double_edge()) == 1);
    CHECK(cyclomatic_number(Multigraph(4, {})) == 0);
    CHECK(cyclomatic_number(fixture::theta()) == 2);
    CHECK(cyclomatic_number(fixture::k4()) == 3);
    CHECK(cyclomatic_number(fixture::single_loop()) == 1);
}

TEST_CASE("edge contraction and deletion") {
    CHECK(contract_edge(fixture::k3(), 0) == Multigraph(2, {{0, 1}, {0, 1}}));
    CHECK(contract_edge(fixture::p3(), 0) == Multigraph(2, {{0, 1}}));
    CHECK(contract_edge(fixture::double_edge(), 0) == Multigraph(1, {{0, 0}}));
    CHECK_THROWS_AS(contract_edge(fixture::single_loop(), 0), InputError);
    CHECK(delete_edge(fixture::k3(), 2) == fixture::p3());
    CHECK(delete_edge(fixture::double_edge(), 1) == Multigraph(2, {{0, 1}}));
    CHECK_FALSE(delete_edge(Multigraph(2, {{0, 1}, {1, 1}}), 1).has_loop());
    CHECK(simplify(Multigraph(2, {{1, 0}, {0, 1}, {1, 1}})) == Multigraph(2, {{0, 1}}));
}

TEST_CASE("structural predicates") {
    CHECK(fixture::p3().has_bridge());
    CHECK_FALSE(fixture::k3().has_bridge());
    CHECK_FALSE(fixture::double_edge().has_bridge());
    CHECK_FALSE(fixture::single_loop().has_bridge());
    CHECK(Multigraph(3, {{0, 1}}).component_count() == 2);
    CHECK(fixture::double_edge().has_parallel_edges());
    CHECK_THROWS_AS(Multigraph(2, {{0, 2}}), InputError);
}

TEST_CASE("acyclic orientation examples") {
    CHECK(enumerate_acyclic_orientations(fixture::k3()).size() == 6);
    CHECK(enumerate_acyclic_orientations(fixture::p3()).size() == 4);
    CHECK(enumerate_acyclic_orientations(fixture::single_loop()).empty());
    CHECK(enumerate_acyclic_orientations(fixture::double_edge()).size() == 2);
    CHECK_THROWS_AS(enumerate_acyclic_orientations(Multigraph(2, std::vector<Edge>(30, Edge{0, 1}))), CapExceeded);
}

TEST_CASE("totally cyclic orientation examples") {
    CHECK(enumerate_totally_cyclic_orientations(fixture::double_edge()).size() == 2);
    CHECK(enumerate_totally_cyclic_orientations(fixture::theta()).size() == 6);
    CHECK(enumerate_totally_cyclic_orientations(fixture::p3()).empty());
    CHECK(enumerate_totally_cyclic_orientations(fixture::single_loop()).size() == 2);
}

TEST_CASE("in-degree sequences") {
    CHECK(in_degree_sequence_count(enumerate_totally_cyclic_orientations(fixture::double_edge())) == 1);
    CHECK(in_degree_sequence_count(enumerate_totally_cyclic_orientations(fixture::theta())) == 2);
    CHECK(in_degree_sequence_count({}) == 0);
    std::vector<Orientation> mixed = enumerate_totally_cyclic_orientations(fixture::theta());
    mixed.push_back(enumerate_totally_cyclic_orientations(fixture::double_edge()).front());
    CHECK_THROWS_AS(in_degree_sequence_count(mixed), InputError);
}

TEST_CASE("orientation to poset") {
    auto path = std::make_shared<const Multigraph>(fixture::p3());
    CHECK(orientation_to_poset(Orientation(path, 0)) == Poset::chain(3));
    auto tri = std::make_shared<const Multigraph>(fixture::k3());
    // edges 0-1, 1-2, 0-2 all forward
    CHECK(orientation_to_poset(Orientation(tri, 0)) == Poset::chain(3));
    CHECK_THROWS_AS(orientation_to_poset(Orientation(tri, 0b100)), InputError);
    auto empty = std::make_shared<const Multigraph>(Multigraph(3, {}));
    CHECK(orientation_to_poset(Orientation(empty, 0)) == Poset::antichain(3));
}

TEST_CASE("orientation predicates agree with per-edge reachability") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int m = 1 + static_cast<int>(rng() % 8);
        std::vector<Edge> edges;
        for (int i = 0; i < m; ++i) {
            edges.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
        }
        const Multigraph g(n, edges);
        for (const auto& o : oracle::all_orientations(g)) {
            CHECK(o.is_totally_cyclic() == oracle::every_edge_on_cycle(o));
            CHECK(o.is_acyclic() == oracle::no_edge_on_cycle(o));
        }
    }
}

TEST_CASE("acyclic orientations count |chi(-1)| on all connected graphs up to 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : connected_simple_graphs(n)) {
            const Integer sign = n % 2 == 0 ? 1 : -1;
            CHECK(Integer(enumerate_acyclic_orientations(g).size()) == sign * chromatic_poly(g)(-1));
        }
    }
}

TEST_CASE("connected simple graph classes") {
    const int expected[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        CHECK(connected_simple_graphs(n).size() == static_cast<std::size_t>(expected[n]));
    }
    CHECK(graph_certificate(Multigraph(3, {{0, 1}, {1, 2}})) == graph_certificate(Multigraph(3, {{2, 0}, {0, 1}})));
    CHECK(graph_certificate(fixture::p3()) != graph_certificate(fixture::k3()));
    CHECK(graph_certificate(fixture::double_edge()) != graph_certificate(Multigraph(2, {{0, 1}})));
}

TEST_CASE("graph file parsing") {
    std::istringstream ok("# comment\nvertices 3\n\nedge 0 1 # trailing\nedge 2 2\n");
    CHECK(parse_graph(ok) == Multigraph(3, {{0, 1}, {2, 2}}));
    std::istringstream missing("edge 0 1\n");
    CHECK_THROWS_WITH_AS(parse_graph(missing, "g.txt"), doctest::Contains("g.txt:1:"), InputError);
    std::istringstream range("vertices 2\nedge 0 5\n");
    CHECK_THROWS_WITH_AS(parse_graph(range, "g.txt"), doctest::Contains("g.txt:2:"), InputError);
    std::istringstream junk("vertices 2\nedge 0 x\n");
    CHECK_THROWS_AS(parse_graph(junk), InputError);
    CHECK(read_graph_file(fixture::data_path("k3.graph")) == fixture::k3());
    CHECK_THROWS_AS(read_graph_file(fixture::data_path("bad_vertex.graph")), InputError);
    CHECK_THROWS_AS(read_graph_file(fixture::data_path("missing.graph")), InputError);
    std::istringstream round(to_text(fixture::k4()));
    CHECK(parse_graph(round) == fixture::k4());
}
