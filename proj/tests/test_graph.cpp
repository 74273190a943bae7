#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <sstream>

#include "oracles.hpp"
#include "sedge/graph.hpp"

using namespace sedge;

namespace {

// triangle 0-1-2 with pendants 3 (at 1), 4 (at 0), 5 (at 2)
graph tripod() {
    return from_edge_list(6, {{0, 1}, {0, 2}, {1, 2}, {2, 5}, {1, 3}, {0, 4}});
}

} // namespace

TEST_CASE("from_edge_list normalizes and validates") {
    graph c3 = from_edge_list(3, {{1, 0}, {2, 1}, {0, 2}});
    CHECK(c3 == cycle_graph(3));
    CHECK_THROWS_AS(from_edge_list(2, {{0, 0}}), loop_edge_error);
    CHECK_THROWS_AS(from_edge_list(2, {{0, 3}}), vertex_out_of_range_error);
    CHECK_THROWS_AS(from_edge_list(3, {{0, 1}, {1, 0}}), duplicate_edge_error);
    graph lenient = from_edge_list(3, {{0, 1}, {1, 0}}, duplicate_policy::dedup);
    CHECK(lenient.m() == 1);
}

TEST_CASE("figure graph has the expected shape") {
    graph g = tripod();
    auto d = degrees(g);
    std::sort(d.begin(), d.end());
    CHECK(d == std::vector<int>{1, 1, 1, 3, 3, 3});
    CHECK(count_triangles(g) == 1);
    CHECK(is_connected(g));
}

TEST_CASE("generators") {
    CHECK(cycle_graph(3) == complete_graph(3));
    CHECK(generate("star", {3}).m() == 3);
    auto d = degrees(star_graph(3));
    std::sort(d.begin(), d.end());
    CHECK(d == std::vector<int>{1, 1, 1, 3});
    CHECK(crown_graph(1).m() == 0);
    CHECK(crown_graph(2) == from_edge_list(4, {{0, 3}, {1, 2}}));
    CHECK(oracle::isomorphic_by_permutations(crown_graph(3), cycle_graph(6)));
    CHECK(prism_graph(3).n == 6);
    CHECK_THROWS_AS(cycle_graph(2), invalid_parameter_error);
    CHECK_THROWS_AS(generate("prism", {2}), invalid_parameter_error);
    CHECK_THROWS_AS(generate("nosuch", {1}), invalid_parameter_error);
}

TEST_CASE("degree sum equals twice the edge count") {
    for (const auto& g : {cycle_graph(5), star_graph(4), complete_graph(5), tripod()}) {
        auto d = degrees(g);
        CHECK(std::accumulate(d.begin(), d.end(), 0) == 2 * g.m());
    }
}

TEST_CASE("predicates on the named families") {
    auto k13 = predicates(star_graph(3));
    CHECK(k13.is_bipartite);
    CHECK_FALSE(k13.is_claw_free);
    CHECK(k13.is_tree);
    CHECK(k13.is_semiregular_bipartite);

    auto c6 = predicates(cycle_graph(6));
    CHECK(c6.is_eulerian);
    CHECK(c6.is_bipartite);
    CHECK(c6.is_regular);

    auto p6 = predicates(prism_graph(6));
    CHECK(p6.is_regular);
    CHECK_FALSE(predicates(cycle_graph(5)).is_bipartite);
    CHECK(predicates(cycle_graph(5)).is_unicyclic);
    CHECK_FALSE(predicates(disjoint_union(cycle_graph(3), cycle_graph(3))).is_eulerian);
}

TEST_CASE("triangle counts match brute-force subsets") {
    CHECK(count_triangles(cycle_graph(3)) == 1);
    CHECK(count_triangles(complete_graph(4)) == 4);
    CHECK(count_triangles(tripod()) == 1);
    for (int n = 4; n <= 8; ++n) {
        graph g = complete_graph(n);
        CHECK(count_triangles(g) == oracle::triangles_by_subsets(g));
        // also via the trace of the cubed adjacency matrix
        imat a = adjacency_matrix(g);
        CHECK(count_triangles(g) == (a * a * a).trace() / 6);
    }
}

TEST_CASE("bridges against the removal oracle") {
    CHECK(find_bridges(path_graph(3)).size() == 2);
    CHECK(find_bridges(cycle_graph(5)).empty());
    graph tri_pendant = from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK(find_bridges(tri_pendant) == std::vector<vertex_pair>{{2, 3}});
    for (int n = 4; n <= 7; ++n) {
        for (const auto& g : oracle::connected_classes_by_masks(std::min(n, 6))) {
            CHECK(find_bridges(g) == oracle::bridges_by_removal(g));
        }
        if (n >= 6) break;  // the n=6 sweep already covers every class shape
    }
}

TEST_CASE("disjoint union relabels the second operand") {
    graph u = disjoint_union(cycle_graph(3), cycle_graph(3));
    CHECK(u.n == 6);
    CHECK(u.m() == 6);
    CHECK(component_count(u) == 2);
    graph empty{0, {}};
    CHECK(disjoint_union(tripod(), empty) == tripod());
}

TEST_CASE("edge list round trip and comments") {
    graph g = tripod();
    std::string text = to_edge_list(g);
    std::istringstream in("# comment line\n" + text);
    CHECK(read_edge_list(in) == g);

    std::istringstream bad("2 1\n1 0\n");
    CHECK_THROWS_AS(read_edge_list(bad), parse_error);
    std::istringstream short_input("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(short_input), parse_error);
    std::istringstream trailing("1 0 junk\n");
    CHECK_THROWS_AS(read_edge_list(trailing), parse_error);
}
