#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sedge/charpoly.hpp"
#include "sedge/graph.hpp"
#include "sedge/poly.hpp"
#include "sedge/zeta.hpp"

using namespace sedge;

TEST_CASE("polynomial arithmetic basics") {
    ipoly p{1, 0, -1};  // 1 - u^2
    ipoly q{1, 1};      // 1 + u
    CHECK(p == ipoly{1, -1} * q);
    CHECK(divide_exact(p, q) == ipoly{1, -1});
    CHECK_THROWS_AS(divide_exact(ipoly{1, 1, 1}, q), invalid_parameter_error);
    CHECK((ipoly{0, 1, 2} + ipoly{1, -1, -2}) == ipoly{1});
    CHECK(ipoly{1, -2, 3}.negated_argument() == ipoly{1, 2, 3});
    CHECK(ipoly{2, 0, 1}.eval(3) == 11);
    CHECK(ipoly{}.degree() == -1);
    CHECK(pow(ipoly{1, -1}, 2) == ipoly{1, -2, 1});
    CHECK(ipoly{1, 0, -2, 5}.reversed(3) == ipoly{5, -2, 0, 1});
}

TEST_CASE("polynomial printing") {
    CHECK(to_human(ipoly{1, 0, 0, -2, 0, 0, 1}) == "1 - 2u^3 + u^6");
    CHECK(to_human(ipoly{0, -1}) == "-u");
    CHECK(to_human(ipoly{}) == "0");
    CHECK(to_human(ipoly{-3, 2}) == "-3 + 2u");
    CHECK(to_json(ipoly{1, 0, -2}) == "{\"coefficients\":[1,0,-2]}");
}

TEST_CASE("characteristic polynomials of the small named graphs") {
    CHECK(char_poly(adjacency_matrix(complete_graph(2))) == ipoly{-1, 0, 1});
    CHECK(char_poly(adjacency_matrix(cycle_graph(3))) == ipoly{-2, -3, 0, 1});
    CHECK(char_poly(adjacency_matrix(star_graph(3))) == ipoly{0, 0, -3, 0, 1});
}

TEST_CASE("characteristic polynomial matches the cofactor oracle up to dimension 6") {
    std::vector<graph> corpus{cycle_graph(3), path_graph(4), star_graph(4), cycle_graph(6),
                              complete_graph(4), prism_graph(3), complete_bipartite_graph(2, 3),
                              complete_graph(5)};
    for (const auto& g : corpus) {
        if (g.n > 6) continue;
        CHECK(char_poly(adjacency_matrix(g)) == oracle::charpoly_cofactor(adjacency_matrix(g)));
    }
    // matrices with negative entries
    imat signed_m = imat::from_rows({{0, 1, -1}, {1, 0, 1}, {-1, 1, 0}});
    CHECK(char_poly(signed_m) == oracle::charpoly_cofactor(signed_m));
}

TEST_CASE("direct and modular characteristic polynomial routes agree") {
    std::vector<graph> corpus{prism_graph(6), complete_graph(6), crown_graph(6)};
    for (const auto& g : corpus) {
        imat a = adjacency_matrix(g);
        // force both paths by toggling the threshold around the dimension
        CHECK(char_poly(a, 64) == char_poly(a, 1));
    }
}

TEST_CASE("integer determinants") {
    CHECK(integer_determinant(imat::from_rows({{2, 0}, {0, 3}})) == 6);
    CHECK(integer_determinant(imat::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(integer_determinant(imat::from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK(integer_determinant(adjacency_matrix(cycle_graph(4))) == 0);
    CHECK(integer_determinant(imat::identity(5)) == 1);
}

TEST_CASE("pencil determinant by interpolation") {
    using pm = poly_matrix;
    pm one_by_one{{ipoly{1, -2}}};
    CHECK(poly_det(one_by_one, 1) == ipoly{1, -2});

    pm diag{{ipoly{1, -1}, ipoly{}}, {ipoly{}, ipoly{1, 1}}};
    CHECK(poly_det(diag, 2) == ipoly{1, 0, -1});

    // triangle pencil: I - A u + I u^2 has determinant (1 - u^3)^2 / (1 - u^2)
    pm c3 = bass_pencil(adjacency_matrix(cycle_graph(3)), degrees(cycle_graph(3)));
    ipoly expected = divide_exact(pow(ipoly{1, 0, 0, -1}, 2), ipoly{1, 0, -1});
    CHECK(poly_det(c3, 6) == expected);

    CHECK_THROWS_AS(poly_det(pm{{ipoly{0, 0, 0, 1}}}, 2), degree_bound_error);
}

TEST_CASE("pencil determinant agrees with cofactor expansion up to dimension 4") {
    std::vector<graph> corpus{path_graph(4), cycle_graph(4), star_graph(3), complete_graph(4)};
    for (const auto& g : corpus) {
        auto pencil = bass_pencil(adjacency_matrix(g), degrees(g));
        CHECK(poly_det(pencil, 2 * g.n) == oracle::poly_cofactor_det(pencil));
    }
}
