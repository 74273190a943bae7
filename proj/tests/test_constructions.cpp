#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sedge/constructions.hpp"
#include "sedge/graph.hpp"
#include "sedge/isomorphism.hpp"

using namespace sedge;

namespace {

graph tripod() {
    return from_edge_list(6, {{0, 1}, {0, 2}, {1, 2}, {2, 5}, {1, 3}, {0, 4}});
}

} // namespace

TEST_CASE("default orientation follows the lexicographic rule") {
    auto o = default_orientation(cycle_graph(3));
    CHECK(o.directed == std::vector<vertex_pair>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(default_orientation(path_graph(2)).directed == std::vector<vertex_pair>{{0, 1}});
    CHECK(o.source(0) == 0);
    CHECK(o.target(0) == 1);
    CHECK(o.source(3) == 1);  // reverse of edge 0
    CHECK(o.target(3) == 0);
}

TEST_CASE("edge adjacency matrix of the cyclically oriented triangle") {
    graph c3 = cycle_graph(3);
    // with this orientation the labels e1={0,1}, e2={0,2}, e3={1,2} follow
    // the directed cycle 1 -> 0 -> 2 -> 1, giving the published table
    auto o = orientation_from_pairs(c3, {{1, 0}, {0, 2}, {2, 1}});
    auto m = make_edge_adjacency_matrix(c3, o);
    imat expected = imat::from_rows({
        {0, 1, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0},
        {1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 1},
        {0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 1, 0},
    });
    CHECK(m.entries == expected);
    CHECK(m.block_b().is_zero());
    CHECK(m.block_c().is_zero());
    CHECK(m.block_d() == m.block_a().transposed());
    // the symmetrized matrix is block-diagonal with two triangle blocks
    imat s = m.entries + m.entries.transposed();
    imat jm = imat::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    imat two_triangles(6, 6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            two_triangles(i, j) = jm(i, j);
            two_triangles(3 + i, 3 + j) = jm(i, j);
        }
    CHECK(s == two_triangles);
    CHECK(component_count(graph_from_adjacency(s)) == 2);
}

TEST_CASE("single edge has the zero edge adjacency matrix") {
    auto m = make_edge_adjacency_matrix(path_graph(2));
    CHECK(m.entries == imat(2, 2));
}

TEST_CASE("orientation mismatch is rejected") {
    CHECK_THROWS_AS(orientation_from_pairs(cycle_graph(3), {{0, 1}, {0, 2}, {1, 0}}),
                    orientation_mismatch_error);
    CHECK_THROWS_AS(orientation_from_pairs(cycle_graph(3), {{0, 1}, {0, 2}}),
                    orientation_mismatch_error);
}

TEST_CASE("the 3-star matches the published symmetric edge adjacency matrix") {
    graph k13 = star_graph(3);
    // leaf->center, center->leaf, leaf->center reproduces the drawing's labels
    auto o = orientation_from_pairs(k13, {{1, 0}, {0, 2}, {3, 0}});
    auto m = make_edge_adjacency_matrix(k13, o);
    imat gamma_a = m.entries + m.entries.transposed();
    imat expected = imat::from_rows({
        {0, 1, 0, 0, 0, 1},
        {1, 0, 1, 0, 0, 0},
        {0, 1, 0, 1, 0, 0},
        {0, 0, 1, 0, 1, 0},
        {0, 0, 0, 1, 0, 1},
        {1, 0, 0, 0, 1, 0},
    });
    CHECK(gamma_a == expected);
}

TEST_CASE("symmetric edge graph golden images") {
    CHECK(are_isomorphic(symmetric_edge_graph(cycle_graph(3)),
                         disjoint_union(cycle_graph(3), cycle_graph(3))));
    CHECK(are_isomorphic(symmetric_edge_graph(star_graph(3)), cycle_graph(6)));
    CHECK(are_isomorphic(symmetric_edge_graph(star_graph(4)), prism_graph(4)));  // the cube
    CHECK(are_isomorphic(symmetric_edge_graph(star_graph(4)), crown_graph(4)));
    CHECK(are_isomorphic(symmetric_edge_graph(complete_bipartite_graph(2, 3)), prism_graph(6)));
    // stars map to crowns in general
    for (int k = 2; k <= 5; ++k)
        CHECK(are_isomorphic(symmetric_edge_graph(star_graph(k)), crown_graph(k)));
}

TEST_CASE("edge count of the image") {
    for (const auto& g : {cycle_graph(5), star_graph(4), complete_graph(5), tripod()}) {
        auto d = degrees(g);
        std::int64_t sum_sq = 0;
        for (int x : d) sum_sq += std::int64_t(x) * x;
        graph gamma = symmetric_edge_graph(g);
        CHECK(gamma.n == 2 * g.m());
        CHECK(gamma.m() == sum_sq - 2 * g.m());
    }
}

TEST_CASE("iterated symmetric edge graphs") {
    graph g3 = gamma_iterate(path_graph(4), 3);
    CHECK(g3.n == 8);
    CHECK(g3.m() == 0);
    CHECK(are_isomorphic(gamma_iterate(cycle_graph(4), 2),
                         disjoint_union(disjoint_union(cycle_graph(4), cycle_graph(4)),
                                        disjoint_union(cycle_graph(4), cycle_graph(4)))));
    graph two_c6 = gamma_iterate(star_graph(3), 2);
    CHECK(are_isomorphic(two_c6, disjoint_union(cycle_graph(6), cycle_graph(6))));
    CHECK(gamma_iterate(tripod(), 0) == tripod());
    CHECK_THROWS_AS(gamma_iterate(complete_graph(6), 4, 512), size_limit_error);
}

TEST_CASE("line graphs") {
    CHECK(are_isomorphic(line_graph(cycle_graph(5)), cycle_graph(5)));
    CHECK(are_isomorphic(line_graph(path_graph(5)), path_graph(4)));
    CHECK(are_isomorphic(line_graph(star_graph(3)), cycle_graph(3)));
    graph fork = from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    graph tri_pendant = from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK(are_isomorphic(line_graph(fork), tri_pendant));
}

TEST_CASE("kronecker products") {
    CHECK(are_isomorphic(kronecker_product(complete_graph(2), complete_graph(2)),
                         disjoint_union(path_graph(2), path_graph(2))));
    CHECK(are_isomorphic(kronecker_product(complete_graph(4), complete_graph(2)), crown_graph(4)));
    for (const auto& g : {cycle_graph(4), cycle_graph(5), star_graph(3), tripod()})
        CHECK(are_isomorphic(kronecker_product(g, complete_graph(2)),
                             kronecker_double_cover(g).cover));
}

TEST_CASE("double cover connectivity tracks bipartiteness") {
    CHECK(are_isomorphic(kronecker_double_cover(cycle_graph(4)).cover,
                         disjoint_union(cycle_graph(4), cycle_graph(4))));
    CHECK(are_isomorphic(kronecker_double_cover(cycle_graph(3)).cover, cycle_graph(6)));
}

TEST_CASE("the cover of the figure graph matches the published biadjacency matrix") {
    graph g = tripod();
    auto cover = kronecker_double_cover(g);
    imat bi(6, 6);
    for (int k = 0; k < 12; ++k) {
        auto [a, nb] = cover.labeling.cover_edges[k];
        bi(a, nb - 6) = 1;
    }
    imat expected = imat::from_rows({
        {0, 1, 1, 0, 1, 0},
        {1, 0, 1, 1, 0, 0},
        {1, 1, 0, 0, 0, 1},
        {0, 1, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0},
    });
    CHECK(bi == expected);
}

TEST_CASE("cover blocks of the figure graph match the published pair") {
    graph g = tripod();
    auto cover = kronecker_double_cover(g);
    auto blocks = make_cover_blocks(g, cover.labeling);
    imat p = imat::from_rows({
        {0, 1, 1, 0, 0, 0},
        {1, 0, 1, 1, 0, 0},
        {1, 1, 0, 0, 0, 0},
        {0, 1, 0, 0, 1, 0},
        {0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0},
    });
    imat q = imat::from_rows({
        {0, 0, 0, 1, 1, 0},
        {0, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 1},
        {1, 0, 0, 0, 0, 0},
        {0, 1, 0, 1, 0, 0},
    });
    CHECK(blocks.p == p);
    CHECK(blocks.q == q);
    CHECK(blocks.p + blocks.q == adjacency_matrix(line_graph(g)));

    // A0 - B0 = -(P - Q) under the induced labeling
    auto gb = make_gamma_blocks(make_edge_adjacency_matrix(g));
    CHECK(gb.a0 - gb.b0 == blocks.q - blocks.p);
}

TEST_CASE("gamma blocks") {
    // cyclic triangle: A0 is the triangle adjacency, B0 vanishes
    graph c3 = cycle_graph(3);
    auto o = orientation_from_pairs(c3, {{0, 1}, {2, 0}, {1, 2}});
    auto gb = make_gamma_blocks(make_edge_adjacency_matrix(c3, o));
    CHECK(gb.b0.is_zero());
    CHECK(are_isomorphic(graph_from_adjacency(gb.a0), cycle_graph(3)));

    auto single = make_gamma_blocks(make_edge_adjacency_matrix(path_graph(2)));
    CHECK(single.a0 == imat(1, 1));
    CHECK(single.b0 == imat(1, 1));

    // part-to-part orientation kills the diagonal blocks of M
    for (const auto& g : {complete_bipartite_graph(2, 3), cycle_graph(6), star_graph(4)}) {
        auto m = make_edge_adjacency_matrix(g, bipartite_orientation(g));
        CHECK(m.block_a().is_zero());
        CHECK(m.block_d().is_zero());
        CHECK(make_gamma_blocks(m).a0.is_zero());
    }
    CHECK_THROWS_AS(bipartite_orientation(cycle_graph(5)), invalid_parameter_error);
}

TEST_CASE("double cover predicate") {
    graph g = tripod();
    graph lg = line_graph(g);
    auto fold = fold_fiber_map(g.m());
    CHECK(is_double_cover(symmetric_edge_graph(g), lg, fold));
    auto cover = kronecker_double_cover(g);
    CHECK(is_double_cover(labeled_cover_line_graph(g, cover.labeling), lg, fold));
    CHECK(is_double_cover(kronecker_double_cover(lg).cover, lg, fold));

    // a constant map is not a covering projection
    std::vector<int> bad(6, 0);
    CHECK_FALSE(is_double_cover(cycle_graph(6), cycle_graph(3), bad));
    CHECK_FALSE(is_double_cover(cycle_graph(6), cycle_graph(3), {0, 1, 2, 0, 1, 2, 0}));
}

TEST_CASE("image under any orientation is a label swap away from the default") {
    for (const auto& g : {cycle_graph(5), star_graph(4), tripod()}) {
        const int m = g.m();
        auto dir = default_orientation(g).directed;
        std::vector<int> perm(2 * m);
        for (int i = 0; i < 2 * m; ++i) perm[i] = i;
        for (int i = 1; i < m; i += 2) {
            std::swap(dir[i].first, dir[i].second);
            std::swap(perm[i], perm[m + i]);
        }
        graph flipped = symmetric_edge_graph(g, orientation{dir});
        CHECK(relabel(flipped, perm) == symmetric_edge_graph(g));
    }
}
