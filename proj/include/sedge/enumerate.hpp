#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "sedge/errors.hpp"
#include "sedge/graph.hpp"
#include "sedge/isomorphism.hpp"

namespace sedge {

namespace detail {

inline graph tree_from_pruefer(int n, const std::vector<int>& seq) {
    std::vector<int> deg(n, 1);
    for (int v : seq) ++deg[v];
    std::vector<vertex_pair> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    std::vector<int> rest = seq;
    for (int v : rest) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        if (--deg[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return from_edge_list(n, std::move(edges));
}

// All isomorphism classes of labeled trees on n vertices.
inline std::vector<graph> tree_classes(int n) {
    if (n == 1) return {graph{1, {}}};
    if (n == 2) return {from_edge_list(2, {{0, 1}})};
    std::set<std::string> seen;
    std::vector<graph> out;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        graph t = tree_from_pruefer(n, seq);
        auto cert = canonicalize(t).certificate;
        if (seen.insert(cert).second) out.push_back(std::move(t));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return out;
}

} // namespace detail

// One representative per isomorphism class of connected graphs on exactly
// n vertices: start from the trees and add one edge at a time, deduplicating
// by canonical form at every level. Every connected graph with a cycle has a
// non-bridge edge, so each level reaches everything from the level below.
inline std::vector<graph> enumerate_connected_exact(int n) {
    if (n < 1) throw invalid_parameter_error("need n >= 1");
    if (n > 7) throw size_limit_error("connected enumeration supports n <= 7");
    std::vector<graph> out;
    std::set<std::string> seen;
    std::vector<graph> level = detail::tree_classes(n);
    for (auto& t : level) {
        seen.insert(canonicalize(t).certificate);
        out.push_back(t);
    }
    const int max_m = n * (n - 1) / 2;
    for (int m = n - 1; m < max_m && !level.empty(); ++m) {
        std::vector<graph> next;
        std::set<std::string> next_seen;
        for (const auto& g : level) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (has_edge(g, u, v)) continue;
                    auto edges = g.edges;
                    edges.emplace_back(u, v);
                    graph h = from_edge_list(n, std::move(edges));
                    auto cert = canonicalize(h).certificate;
                    if (next_seen.insert(cert).second) {
                        seen.insert(cert);
                        next.push_back(std::move(h));
                    }
                }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

// Connected isomorphism classes with 1..n_max vertices, smaller graphs first.
inline std::vector<graph> enumerate_connected(int n_max) {
    if (n_max < 1) throw invalid_parameter_error("need n_max >= 1");
    if (n_max > 7) throw size_limit_error("connected enumeration supports n_max <= 7");
    std::vector<graph> out;
    for (int n = 1; n <= n_max; ++n) {
        auto classes = enumerate_connected_exact(n);
        out.insert(out.end(), classes.begin(), classes.end());
    }
    return out;
}

} // namespace sedge
