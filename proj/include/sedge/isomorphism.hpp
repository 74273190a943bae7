#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sedge/errors.hpp"
#include "sedge/graph.hpp"

namespace sedge {

struct iso_options {
    int max_vertices = 20;
};

namespace detail {

// One round of neighborhood color refinement. Signatures are ordered by
// value so the resulting color ids are isomorphism-invariant.
inline bool refine_step(const std::vector<std::vector<int>>& adj, std::vector<int>& color) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> s;
        s.reserve(adj[v].size() + 1);
        s.push_back(color[v]);
        for (int w : adj[v]) s.push_back(color[w]);
        std::sort(s.begin() + 1, s.end());
        sig[v] = {std::move(s), v};
    }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[a].first < sig[b].first; });
    std::vector<int> fresh(n);
    int classes = 0;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++classes;
        fresh[order[i]] = classes;
    }
    bool changed = fresh != color;
    color = std::move(fresh);
    return changed;
}

inline void refine_to_stable(const std::vector<std::vector<int>>& adj, std::vector<int>& color) {
    int old_classes = -1;
    while (true) {
        refine_step(adj, color);
        int classes = color.empty() ? 0 : 1 + *std::max_element(color.begin(), color.end());
        if (classes == old_classes) break;
        old_classes = classes;
        if (classes == static_cast<int>(color.size())) break;
    }
}

inline std::vector<std::vector<int>> color_classes(const std::vector<int>& color) {
    int classes = color.empty() ? 0 : 1 + *std::max_element(color.begin(), color.end());
    std::vector<std::vector<int>> cls(classes);
    for (int v = 0; v < static_cast<int>(color.size()); ++v) cls[color[v]].push_back(v);
    return cls;
}

} // namespace detail

inline bool verify_isomorphism(const graph& g, const graph& h, const std::vector<int>& map) {
    if (g.n != h.n || g.m() != h.m() || static_cast<int>(map.size()) != g.n) return false;
    std::vector<bool> seen(h.n, false);
    for (int v : map) {
        if (v < 0 || v >= h.n || seen[v]) return false;
        seen[v] = true;
    }
    for (auto [u, v] : g.edges)
        if (!has_edge(h, map[u], map[v])) return false;
    return true;  // same edge count, so edge-preserving injection suffices
}

// Partition-backtracking isomorphism search. Refinement runs jointly on both
// graphs after every individualization, which keeps the tree small even on
// the regular cover graphs this library produces.
inline std::optional<std::vector<int>> find_isomorphism(const graph& g, const graph& h,
                                                        const iso_options& opt = {}) {
    if (g.n > opt.max_vertices || h.n > opt.max_vertices)
        throw size_limit_error("isomorphism bound " + std::to_string(opt.max_vertices) +
                               " exceeded (n=" + std::to_string(std::max(g.n, h.n)) + ")");
    if (g.n != h.n || g.m() != h.m()) return std::nullopt;
    if (g.n == 0) return std::vector<int>{};
    auto dg = degrees(g), dh = degrees(h);
    {
        auto sg = dg, sh = dh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return std::nullopt;
    }

    auto adj_g = adjacency_lists(g);
    auto adj_h = adjacency_lists(h);
    const int n = g.n;

    // refine both graphs with a shared signature space by refining their
    // disjoint union; cross colors must then match class-by-class
    std::vector<std::vector<int>> adj_u(2 * n);
    for (int v = 0; v < n; ++v) {
        adj_u[v] = adj_g[v];
        adj_u[n + v].reserve(adj_h[v].size());
        for (int w : adj_h[v]) adj_u[n + v].push_back(n + w);
    }

    std::vector<int> map_gh(n, -1), map_hg(n, -1);

    auto search = [&](auto&& self, std::vector<int> color) -> bool {
        detail::refine_to_stable(adj_u, color);
        // class sizes must split evenly between the two halves
        auto cls = detail::color_classes(color);
        int target = -1;
        for (std::size_t c = 0; c < cls.size(); ++c) {
            int in_g = 0;
            for (int v : cls[c])
                if (v < n) ++in_g;
            if (2 * in_g != static_cast<int>(cls[c].size())) return false;
            if (in_g > 1 && target == -1) target = static_cast<int>(c);
        }
        if (target == -1) {
            // discrete up to pairing: each class is {v, n+w}
            for (auto& c : cls) {
                int gv = -1, hv = -1;
                for (int v : c)
                    (v < n ? gv : hv) = v < n ? v : v - n;
                map_gh[gv] = hv;
            }
            return verify_isomorphism(g, h, map_gh);
        }
        // individualize the first g-vertex of the target class against each
        // h-vertex of the same class
        int u = -1;
        for (int v : cls[target])
            if (v < n) {
                u = v;
                break;
            }
        int fresh = static_cast<int>(cls.size());
        for (int v : cls[target]) {
            if (v < n) continue;
            auto next = color;
            next[u] = fresh;
            next[v] = fresh;
            if (self(self, std::move(next))) return true;
        }
        return false;
    };

    if (!search(search, std::vector<int>(2 * n, 0))) return std::nullopt;
    return map_gh;
}

inline bool are_isomorphic(const graph& g, const graph& h, const iso_options& opt = {}) {
    return find_isomorphism(g, h, opt).has_value();
}

struct canonical_form {
    std::vector<vertex_pair> canonical_edge_list;
    std::string certificate;

    bool operator==(const canonical_form& o) const = default;
    auto operator<=>(const canonical_form& o) const = default;
};

// Canonical labeling by individualization-refinement: take the minimum
// certificate over all leaves of the refinement tree.
inline canonical_form canonicalize(const graph& g, const iso_options& opt = {}) {
    if (g.n > opt.max_vertices)
        throw size_limit_error("canonical form bound " + std::to_string(opt.max_vertices) +
                               " exceeded (n=" + std::to_string(g.n) + ")");
    auto adj = adjacency_lists(g);
    const int n = g.n;
    std::vector<vertex_pair> best;
    bool have_best = false;

    auto leaf = [&](const std::vector<int>& color) {
        std::vector<int> pos(n);
        for (int v = 0; v < n; ++v) pos[v] = color[v];
        std::vector<vertex_pair> edges;
        edges.reserve(g.edges.size());
        for (auto [u, v] : g.edges) {
            int a = pos[u], b = pos[v];
            if (a > b) std::swap(a, b);
            edges.emplace_back(a, b);
        }
        std::sort(edges.begin(), edges.end());
        if (!have_best || edges < best) {
            best = std::move(edges);
            have_best = true;
        }
    };

    auto search = [&](auto&& self, std::vector<int> color) -> void {
        detail::refine_to_stable(adj, color);
        auto cls = detail::color_classes(color);
        int target = -1;
        for (std::size_t c = 0; c < cls.size(); ++c)
            if (cls[c].size() > 1) {
                target = static_cast<int>(c);
                break;
            }
        if (target == -1) {
            leaf(color);
            return;
        }
        int fresh = static_cast<int>(cls.size());
        for (int v : cls[target]) {
            auto next = color;
            next[v] = fresh;
            self(self, std::move(next));
        }
    };

    if (n == 0) return canonical_form{{}, "n=0;"};
    search(search, std::vector<int>(n, 0));

    std::string cert = "n=" + std::to_string(n) + ";";
    for (auto [u, v] : best) cert += std::to_string(u) + "," + std::to_string(v) + ";";
    return canonical_form{std::move(best), std::move(cert)};
}

} // namespace sedge
