#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sedge/enumerate.hpp"
#include "sedge/graph.hpp"
#include "sedge/isomorphism.hpp"

using namespace sedge;

TEST_CASE("basic isomorphism decisions") {
    CHECK(are_isomorphic(crown_graph(3), cycle_graph(6)));
    CHECK(oracle::isomorphic_by_permutations(crown_graph(3), cycle_graph(6)));
    CHECK_FALSE(are_isomorphic(star_graph(3), cycle_graph(3)));
    CHECK(are_isomorphic(graph{0, {}}, graph{0, {}}));
    CHECK_THROWS_AS(are_isomorphic(complete_graph(21), complete_graph(21), iso_options{20}),
                    size_limit_error);
}

TEST_CASE("witness maps re-verify edge by edge") {
    auto w = find_isomorphism(crown_graph(3), cycle_graph(6));
    REQUIRE(w.has_value());
    CHECK(verify_isomorphism(crown_graph(3), cycle_graph(6), *w));

    auto none = find_isomorphism(path_graph(4), star_graph(3));
    CHECK_FALSE(none.has_value());
}

TEST_CASE("isomorphism agrees with the permutation oracle on all 5-vertex classes") {
    auto classes = oracle::connected_classes_by_masks(5);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i; j < classes.size(); ++j) {
            bool fast = are_isomorphic(classes[i], classes[j]);
            bool slow = oracle::isomorphic_by_permutations(classes[i], classes[j]);
            CHECK(fast == slow);
        }
}

TEST_CASE("isomorphism is an equivalence relation on a mixed corpus") {
    std::vector<graph> corpus{cycle_graph(6),  crown_graph(3),    star_graph(4),
                              path_graph(5),   complete_graph(4), prism_graph(3),
                              complete_bipartite_graph(2, 3)};
    // reflexive, symmetric; transitivity via the crown/cycle pair
    for (const auto& g : corpus) CHECK(are_isomorphic(g, g));
    for (const auto& g : corpus)
        for (const auto& h : corpus) CHECK(are_isomorphic(g, h) == are_isomorphic(h, g));
    CHECK(are_isomorphic(cycle_graph(6), crown_graph(3)));
    graph shifted = relabel(cycle_graph(6), {5, 0, 1, 2, 3, 4});
    CHECK(are_isomorphic(crown_graph(3), shifted));
    CHECK(are_isomorphic(cycle_graph(6), shifted));
}

TEST_CASE("canonical forms separate exactly the isomorphism classes") {
    CHECK(canonicalize(cycle_graph(6)).certificate != canonicalize(disjoint_union(cycle_graph(3), cycle_graph(3))).certificate);
    CHECK(canonicalize(crown_graph(3)).certificate == canonicalize(cycle_graph(6)).certificate);

    // all labelings of P_3 collapse to one certificate
    std::set<std::string> certs;
    std::vector<int> perm{0, 1, 2};
    do {
        certs.insert(canonicalize(relabel(path_graph(3), perm)).certificate);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(certs.size() == 1);

    CHECK_THROWS_AS(canonicalize(complete_graph(21), iso_options{20}), size_limit_error);
}

TEST_CASE("canonical form is invariant under 50 random relabelings per graph") {
    std::mt19937 rng(2024);
    std::vector<graph> corpus{cycle_graph(7), star_graph(5), prism_graph(4),
                              complete_bipartite_graph(3, 3), path_graph(6)};
    for (const auto& g : corpus) {
        auto base = canonicalize(g).certificate;
        std::vector<int> perm(g.n);
        for (int i = 0; i < g.n; ++i) perm[i] = i;
        for (int s = 0; s < 50; ++s) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonicalize(relabel(g, perm)).certificate == base);
        }
    }
}

TEST_CASE("certificates match pairwise isomorphism across all 5-vertex classes") {
    auto classes = oracle::connected_classes_by_masks(5);
    std::set<std::string> certs;
    for (const auto& g : classes) certs.insert(canonicalize(g).certificate);
    CHECK(certs.size() == classes.size());
}
