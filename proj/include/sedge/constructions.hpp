#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sedge/errors.hpp"
#include "sedge/graph.hpp"
#include "sedge/matrix.hpp"

namespace sedge {

// One chosen direction per edge. Index i holds the directed version of
// edges[i]; the reverse label lives implicitly at index m+i.
struct orientation {
    std::vector<vertex_pair> directed;  // (source, target), one per edge

    int m() const { return static_cast<int>(directed.size()); }

    int source(int label) const {  // label in [0, 2m)
        int k = label < m() ? label : label - m();
        return label < m() ? directed[k].first : directed[k].second;
    }
    int target(int label) const {
        int k = label < m() ? label : label - m();
        return label < m() ? directed[k].second : directed[k].first;
    }
};

// Edge i directed min -> max; edges already sit in lexicographic order.
inline orientation default_orientation(const graph& g) {
    return orientation{g.edges};
}

inline void check_orientation(const graph& g, const orientation& o) {
    if (o.m() != g.m()) throw orientation_mismatch_error("orientation edge count differs");
    for (int i = 0; i < g.m(); ++i) {
        auto [s, t] = o.directed[i];
        if (s == t) throw orientation_mismatch_error("degenerate directed edge");
        auto norm = vertex_pair{std::min(s, t), std::max(s, t)};
        if (norm != g.edges[i]) throw orientation_mismatch_error("directed edge " + std::to_string(i) +
                                                                 " does not match underlying edge");
    }
}

inline orientation orientation_from_pairs(const graph& g, std::vector<vertex_pair> pairs) {
    orientation o{std::move(pairs)};
    check_orientation(g, o);
    return o;
}

// All edges directed from part 0 into part 1; reproduces the zero diagonal
// block form of M for bipartite graphs.
inline orientation bipartite_orientation(const graph& g) {
    auto colored = bipartition(g);
    if (!colored) throw invalid_parameter_error("bipartite orientation needs a bipartite graph");
    auto& color = *colored;
    std::vector<vertex_pair> dir;
    dir.reserve(g.edges.size());
    for (auto [u, v] : g.edges) {
        if (color[u] == 0) dir.emplace_back(u, v);
        else dir.emplace_back(v, u);
    }
    return orientation{std::move(dir)};
}

// 2m-by-2m non-backtracking matrix over labels e_1..e_m, e_1^{-1}..e_m^{-1}:
// entry (i,j) is 1 iff label j can follow label i without reversing.
struct edge_adjacency_matrix {
    int m = 0;
    imat entries;

    imat block_a() const { return entries.block(0, 0, m, m); }
    imat block_b() const { return entries.block(0, m, m, m); }
    imat block_c() const { return entries.block(m, 0, m, m); }
    imat block_d() const { return entries.block(m, m, m, m); }
};

inline edge_adjacency_matrix make_edge_adjacency_matrix(const graph& g, const orientation& o) {
    check_orientation(g, o);
    const int m = g.m();
    edge_adjacency_matrix mat{m, imat(2 * m, 2 * m)};
    for (int i = 0; i < 2 * m; ++i)
        for (int j = 0; j < 2 * m; ++j)
            if (o.target(i) == o.source(j) && o.source(i) != o.target(j)) mat.entries(i, j) = 1;
    return mat;
}

inline edge_adjacency_matrix make_edge_adjacency_matrix(const graph& g) {
    return make_edge_adjacency_matrix(g, default_orientation(g));
}

struct gamma_blocks {
    imat a0;  // consistently oriented transitions, A + D
    imat b0;  // head-head and tail-tail transitions, B + C
};

inline gamma_blocks make_gamma_blocks(const edge_adjacency_matrix& m) {
    return gamma_blocks{m.block_a() + m.block_d(), m.block_b() + m.block_c()};
}

inline graph graph_from_adjacency(const imat& a) {
    std::vector<vertex_pair> e;
    for (int i = 0; i < a.rows; ++i)
        for (int j = i + 1; j < a.cols; ++j)
            if (a(i, j)) e.emplace_back(i, j);
    return from_edge_list(a.rows, std::move(e));
}

// Symmetric edge graph: adjacency M + M^T, vertices ordered
// e_1..e_m, e_1^{-1}..e_m^{-1}.
inline graph symmetric_edge_graph(const graph& g, const orientation& o) {
    auto m = make_edge_adjacency_matrix(g, o);
    return graph_from_adjacency(m.entries + m.entries.transposed());
}

inline graph symmetric_edge_graph(const graph& g) {
    return symmetric_edge_graph(g, default_orientation(g));
}

inline graph gamma_iterate(const graph& g, int k, int vertex_bound = 4096) {
    graph cur = g;
    for (int step = 0; step < k; ++step) {
        if (2 * cur.m() > vertex_bound)
            throw size_limit_error("iterated symmetric edge graph would exceed " +
                                   std::to_string(vertex_bound) + " vertices");
        cur = symmetric_edge_graph(cur);
    }
    return cur;
}

// Line graph: vertex i is edge i of g, adjacency = sharing an endpoint.
inline graph line_graph(const graph& g) {
    const int m = g.m();
    std::vector<vertex_pair> e;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = g.edges[i];
            auto [c, d] = g.edges[j];
            if (a == c || a == d || b == c || b == d) e.emplace_back(i, j);
        }
    return from_edge_list(m, std::move(e));
}

// Kronecker product, vertex (x, y) at index x * h.n + y.
inline graph kronecker_product(const graph& g, const graph& h) {
    std::vector<vertex_pair> e;
    for (auto [x, xp] : g.edges)
        for (auto [y, yp] : h.edges) {
            e.emplace_back(x * h.n + y, xp * h.n + yp);
            e.emplace_back(x * h.n + yp, xp * h.n + y);
        }
    return from_edge_list(g.n * h.n, std::move(e), duplicate_policy::dedup);
}

// Labeled edges of the double cover: index k < m carries base label e_{k+1},
// index m+k its reverse. Base edge k oriented a -> b lifts to
// e_k = (a, n+b) and e_{m+k} = (b, n+a).
struct cover_labeling {
    int base_vertex_count = 0;
    int base_edge_count = 0;
    std::vector<vertex_pair> cover_edges;  // (left part vertex, right part vertex)
};

struct double_cover_result {
    graph cover;
    cover_labeling labeling;
};

inline double_cover_result kronecker_double_cover(const graph& g, const orientation& o) {
    check_orientation(g, o);
    const int n = g.n, m = g.m();
    cover_labeling lab{n, m, {}};
    lab.cover_edges.reserve(2 * m);
    std::vector<vertex_pair> e;
    for (int k = 0; k < m; ++k) {
        auto [a, b] = o.directed[k];
        lab.cover_edges.emplace_back(a, n + b);
        e.emplace_back(a, n + b);
    }
    for (int k = 0; k < m; ++k) {
        auto [a, b] = o.directed[k];
        lab.cover_edges.emplace_back(b, n + a);
        e.emplace_back(b, n + a);
    }
    return {from_edge_list(2 * n, std::move(e)), std::move(lab)};
}

inline double_cover_result kronecker_double_cover(const graph& g) {
    return kronecker_double_cover(g, default_orientation(g));
}

inline void check_labeling(const graph& g, const cover_labeling& lab) {
    if (lab.base_vertex_count != g.n || lab.base_edge_count != g.m())
        throw labeling_mismatch_error("labeling size does not match graph");
    const int n = g.n, m = g.m();
    if (static_cast<int>(lab.cover_edges.size()) != 2 * m)
        throw labeling_mismatch_error("labeling must carry 2m cover edges");
    for (int k = 0; k < m; ++k) {
        auto [a, nb] = lab.cover_edges[k];
        auto [b, na] = lab.cover_edges[m + k];
        if (a < 0 || a >= n || b < 0 || b >= n || nb < n || nb >= 2 * n || na < n || na >= 2 * n)
            throw labeling_mismatch_error("cover edge endpoints out of range");
        if (nb - n != b || na - n != a)
            throw labeling_mismatch_error("label " + std::to_string(k) +
                                          " and its reverse do not project to the same base edge");
        if (!has_edge(g, a, b)) throw labeling_mismatch_error("cover edge has no underlying base edge");
    }
    // forgetting the pairing, the labels must cover E(X'') exactly once
    auto all = lab.cover_edges;
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw labeling_mismatch_error("duplicate cover edge in labeling");
}

// Blocks of A(L(X'')) in the labeled edge order: P over same-batch pairs,
// Q across batches. R = P and Q = Q^T are verified, not assumed.
struct cover_blocks {
    imat p;
    imat q;
};

inline cover_blocks make_cover_blocks(const graph& g, const cover_labeling& lab) {
    check_labeling(g, lab);
    const int m = lab.base_edge_count;
    auto share = [&](vertex_pair x, vertex_pair y) {
        return x.first == y.first || x.first == y.second || x.second == y.first ||
               x.second == y.second;
    };
    imat p(m, m), q(m, m), r(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i != j && share(lab.cover_edges[i], lab.cover_edges[j])) p(i, j) = 1;
            if (share(lab.cover_edges[i], lab.cover_edges[m + j])) q(i, j) = 1;
            if (i != j && share(lab.cover_edges[m + i], lab.cover_edges[m + j])) r(i, j) = 1;
        }
    if (!(r == p)) throw labeling_mismatch_error("bottom-right block differs from top-left");
    if (!(q == q.transposed())) throw labeling_mismatch_error("cross block is not symmetric");
    return cover_blocks{std::move(p), std::move(q)};
}

// Line graph of the cover with vertices in labeled edge order, adjacency
// matrix [[P, Q], [Q, P]].
inline graph labeled_cover_line_graph(const graph& g, const cover_labeling& lab) {
    auto blocks = make_cover_blocks(g, lab);
    const int m = lab.base_edge_count;
    imat a(2 * m, 2 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            a(i, j) = blocks.p(i, j);
            a(m + i, m + j) = blocks.p(i, j);
            a(i, m + j) = blocks.q(i, j);
            a(m + i, j) = blocks.q(j, i);
        }
    return graph_from_adjacency(a);
}

inline bool is_double_cover(const graph& y, const graph& x, const std::vector<int>& fiber_map) {
    if (static_cast<int>(fiber_map.size()) != y.n) return false;
    if (y.n != 2 * x.n) return false;
    std::vector<int> fiber_size(x.n, 0);
    for (int v : fiber_map) {
        if (v < 0 || v >= x.n) return false;
        ++fiber_size[v];
    }
    for (int s : fiber_size)
        if (s != 2) return false;
    auto adj_y = adjacency_lists(y);
    auto adj_x = adjacency_lists(x);
    for (int v = 0; v < y.n; ++v) {
        std::vector<int> image;
        image.reserve(adj_y[v].size());
        for (int w : adj_y[v]) image.push_back(fiber_map[w]);
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
        if (image != adj_x[fiber_map[v]]) return false;
    }
    return true;
}

// Fiber map shared by all three covers: vertex i projects to i mod m.
inline std::vector<int> fold_fiber_map(int m) {
    std::vector<int> f(2 * m);
    for (int i = 0; i < m; ++i) {
        f[i] = i;
        f[m + i] = i;
    }
    return f;
}

} // namespace sedge
