#pragma once

// Independent reference implementations used only by tests. Everything here
// takes the slow-but-obvious route so it shares no code path with the
// library routines it cross-checks.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "sedge/graph.hpp"
#include "sedge/matrix.hpp"
#include "sedge/poly.hpp"

namespace oracle {

using sedge::bigint;
using sedge::graph;
using sedge::imat;
using sedge::ipoly;

// Characteristic polynomial by recursive cofactor expansion over polynomial
// entries; O(n!) so only for tiny matrices.
inline ipoly poly_cofactor_det(const std::vector<std::vector<ipoly>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return ipoly::constant(1);
    if (n == 1) return m[0][0];
    ipoly det;
    for (int j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<ipoly>> minor(n - 1, std::vector<ipoly>(n - 1));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        ipoly term = m[0][j] * poly_cofactor_det(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

inline ipoly charpoly_cofactor(const imat& a) {
    const int n = a.rows;
    std::vector<std::vector<ipoly>> m(n, std::vector<ipoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ipoly e = ipoly::constant(-a(i, j));
            if (i == j) e = e + ipoly{0, 1};
            m[i][j] = e;
        }
    return poly_cofactor_det(m);
}

// Fraction-free elimination over the polynomial ring; exact divisions by the
// previous pivot. Independent of both the evaluation-interpolation route and
// the characteristic-polynomial route.
inline ipoly poly_bareiss_det(std::vector<std::vector<ipoly>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return ipoly::constant(1);
    bool negate = false;
    ipoly prev = ipoly::constant(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv == -1) return {};
            std::swap(m[k], m[piv]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = sedge::divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// det(I - M u) done symbolically.
inline ipoly det_i_minus_mu(const imat& mm) {
    const int n = mm.rows;
    std::vector<std::vector<ipoly>> p(n, std::vector<ipoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ipoly e = ipoly{0, -static_cast<long long>(mm(i, j))};
            if (i == j) e = e + ipoly::constant(1);
            p[i][j] = e;
        }
    return poly_bareiss_det(std::move(p));
}

inline std::int64_t triangles_by_subsets(const graph& g) {
    std::int64_t count = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                if (sedge::has_edge(g, a, b) && sedge::has_edge(g, b, c) && sedge::has_edge(g, a, c))
                    ++count;
    return count;
}

inline std::vector<sedge::vertex_pair> bridges_by_removal(const graph& g) {
    std::vector<sedge::vertex_pair> out;
    int base = sedge::component_count(g);
    for (auto e : g.edges) {
        std::vector<sedge::vertex_pair> rest;
        for (auto f : g.edges)
            if (f != e) rest.push_back(f);
        graph h = sedge::from_edge_list(g.n, rest);
        if (sedge::component_count(h) > base) out.push_back(e);
    }
    return out;
}

inline bool isomorphic_by_permutations(const graph& g, const graph& h) {
    if (g.n != h.n || g.edges.size() != h.edges.size()) return false;
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : g.edges)
            if (!sedge::has_edge(h, perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Connected graphs on exactly n labeled vertices, one representative per
// isomorphism class found by minimizing the edge mask over all relabelings.
inline std::vector<graph> connected_classes_by_masks(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    const int bits = static_cast<int>(slots.size());
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p); while (std::next_permutation(p.begin(), p.end()));
    }
    std::map<std::pair<int, int>, int> slot_of;
    for (int i = 0; i < bits; ++i) slot_of[slots[i]] = i;
    std::set<std::uint32_t> reps;
    std::vector<graph> out;
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        std::vector<sedge::vertex_pair> edges;
        for (int i = 0; i < bits; ++i)
            if (mask >> i & 1) edges.push_back(slots[i]);
        graph g = sedge::from_edge_list(n, edges);
        if (!sedge::is_connected(g)) continue;
        std::uint32_t best = mask;
        for (const auto& p : perms) {
            std::uint32_t relab = 0;
            for (auto [u, v] : edges) {
                int a = p[u], b = p[v];
                relab |= 1u << slot_of[{std::min(a, b), std::max(a, b)}];
            }
            best = std::min(best, relab);
        }
        if (best == mask) {
            reps.insert(mask);
            out.push_back(std::move(g));
        }
    }
    return out;
}

} // namespace oracle
