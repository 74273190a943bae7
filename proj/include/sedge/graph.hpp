#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sedge/errors.hpp"
#include "sedge/matrix.hpp"

namespace sedge {

using vertex_pair = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Edges are stored as sorted
// (min,max) pairs in lexicographic order; that ordering fixes the default
// edge labels used by every construction downstream.
struct graph {
    int n = 0;
    std::vector<vertex_pair> edges;

    bool operator==(const graph& o) const = default;

    int m() const { return static_cast<int>(edges.size()); }
};

enum class duplicate_policy { strict, dedup };

inline graph from_edge_list(int n, std::vector<vertex_pair> pairs,
                            duplicate_policy policy = duplicate_policy::strict) {
    if (n < 0) throw invalid_parameter_error("vertex count must be nonnegative");
    for (auto& [u, v] : pairs) {
        if (u == v) throw loop_edge_error("loop edge at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw vertex_out_of_range_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                            ") outside [0," + std::to_string(n) + ")");
        if (u > v) std::swap(u, v);
    }
    std::sort(pairs.begin(), pairs.end());
    if (policy == duplicate_policy::strict) {
        auto it = std::adjacent_find(pairs.begin(), pairs.end());
        if (it != pairs.end())
            throw duplicate_edge_error("duplicate edge (" + std::to_string(it->first) + "," +
                                       std::to_string(it->second) + ")");
    } else {
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    }
    return graph{n, std::move(pairs)};
}

inline std::vector<std::vector<int>> adjacency_lists(const graph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

// Neighborhoods as bitmasks; only valid for n <= 64.
inline std::vector<std::uint64_t> adjacency_masks(const graph& g) {
    if (g.n > 64) throw size_limit_error("adjacency masks need n <= 64");
    std::vector<std::uint64_t> adj(g.n, 0);
    for (auto [u, v] : g.edges) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    return adj;
}

inline imat adjacency_matrix(const graph& g) {
    imat a(g.n, g.n);
    for (auto [u, v] : g.edges) {
        a(u, v) = 1;
        a(v, u) = 1;
    }
    return a;
}

inline std::vector<int> degrees(const graph& g) {
    std::vector<int> d(g.n, 0);
    for (auto [u, v] : g.edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

inline int edge_index(const graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(g.edges.begin(), g.edges.end(), vertex_pair{u, v});
    if (it == g.edges.end() || *it != vertex_pair{u, v})
        throw invalid_parameter_error("no such edge");
    return static_cast<int>(it - g.edges.begin());
}

inline bool has_edge(const graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    return std::binary_search(g.edges.begin(), g.edges.end(), vertex_pair{u, v});
}

// ---------------------------------------------------------------------------
// Named families

inline graph cycle_graph(int n) {
    if (n < 3) throw invalid_parameter_error("cycle needs n >= 3");
    std::vector<vertex_pair> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return from_edge_list(n, std::move(e));
}

inline graph path_graph(int n) {
    if (n < 1) throw invalid_parameter_error("path needs n >= 1");
    std::vector<vertex_pair> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edge_list(n, std::move(e));
}

inline graph complete_graph(int n) {
    if (n < 1) throw invalid_parameter_error("complete graph needs n >= 1");
    std::vector<vertex_pair> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return from_edge_list(n, std::move(e));
}

// K_{1,k}: center 0, leaves 1..k.
inline graph star_graph(int k) {
    if (k < 1) throw invalid_parameter_error("star needs k >= 1");
    std::vector<vertex_pair> e;
    for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
    return from_edge_list(k + 1, std::move(e));
}

inline graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw invalid_parameter_error("complete bipartite needs a,b >= 1");
    std::vector<vertex_pair> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return from_edge_list(a + b, std::move(e));
}

// Crown on 2k vertices: parts {0..k-1} and {k..2k-1}, i ~ k+j iff i != j.
// crown_graph(1) is 2K_1 and crown_graph(2) is 2K_2; both degenerate legally.
inline graph crown_graph(int k) {
    if (k < 1) throw invalid_parameter_error("crown needs k >= 1");
    std::vector<vertex_pair> e;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) e.emplace_back(i, k + j);
    return from_edge_list(2 * k, std::move(e));
}

// Two k-cycles {0..k-1}, {k..2k-1} joined by the matching i ~ k+i.
inline graph prism_graph(int k) {
    if (k < 3) throw invalid_parameter_error("prism needs k >= 3");
    std::vector<vertex_pair> e;
    for (int i = 0; i < k; ++i) {
        e.emplace_back(i, (i + 1) % k);
        e.emplace_back(k + i, k + (i + 1) % k);
        e.emplace_back(i, k + i);
    }
    return from_edge_list(2 * k, std::move(e));
}

inline graph generate(const std::string& family, const std::vector<int>& params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw invalid_parameter_error("family '" + family + "' takes " + std::to_string(k) +
                                          " parameter(s)");
    };
    if (family == "cycle") { want(1); return cycle_graph(params[0]); }
    if (family == "path") { want(1); return path_graph(params[0]); }
    if (family == "complete") { want(1); return complete_graph(params[0]); }
    if (family == "star") { want(1); return star_graph(params[0]); }
    if (family == "complete_bipartite") { want(2); return complete_bipartite_graph(params[0], params[1]); }
    if (family == "crown") { want(1); return crown_graph(params[0]); }
    if (family == "prism") { want(1); return prism_graph(params[0]); }
    throw invalid_parameter_error("unknown family '" + family + "'");
}

// ---------------------------------------------------------------------------
// Structure

inline std::vector<int> component_ids(const graph& g) {
    std::vector<int> comp(g.n, -1);
    auto adj = adjacency_lists(g);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] == -1) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    return comp;
}

inline int component_count(const graph& g) {
    auto comp = component_ids(g);
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

inline bool is_connected(const graph& g) { return component_count(g) <= 1; }

// 2-coloring per component when bipartite.
inline std::optional<std::vector<int>> bipartition(const graph& g) {
    std::vector<int> color(g.n, -1);
    auto adj = adjacency_lists(g);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

inline bool is_bipartite(const graph& g) { return bipartition(g).has_value(); }

inline bool is_regular(const graph& g) {
    auto d = degrees(g);
    for (int v : d)
        if (v != d[0]) return false;
    return true;
}

inline bool is_tree(const graph& g) { return g.n >= 1 && is_connected(g) && g.m() == g.n - 1; }

inline bool is_unicyclic(const graph& g) { return is_connected(g) && g.m() == g.n; }

// Eulerian means connected with every degree even; disconnected graphs are
// not Eulerian under this convention.
inline bool is_eulerian(const graph& g) {
    if (!is_connected(g)) return false;
    for (int d : degrees(g))
        if (d % 2) return false;
    return true;
}

inline bool is_claw_free(const graph& g) {
    auto adj = adjacency_lists(g);
    auto mask = g.n <= 64 ? adjacency_masks(g) : std::vector<std::uint64_t>{};
    for (int v = 0; v < g.n; ++v) {
        const auto& nb = adj[v];
        const int k = static_cast<int>(nb.size());
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                for (int c = b + 1; c < k; ++c) {
                    int x = nb[a], y = nb[b], z = nb[c];
                    bool xy, xz, yz;
                    if (!mask.empty()) {
                        xy = mask[x] >> y & 1;
                        xz = mask[x] >> z & 1;
                        yz = mask[y] >> z & 1;
                    } else {
                        xy = has_edge(g, x, y);
                        xz = has_edge(g, x, z);
                        yz = has_edge(g, y, z);
                    }
                    if (!xy && !xz && !yz) return false;
                }
    }
    return true;
}

inline bool is_cycle_shape(const graph& g) {
    if (g.n < 3 || !is_connected(g) || g.m() != g.n) return false;
    for (int d : degrees(g))
        if (d != 2) return false;
    return true;
}

inline bool is_path_shape(const graph& g) {
    if (!is_connected(g) || g.m() != g.n - 1) return false;
    for (int d : degrees(g))
        if (d > 2) return false;
    return true;
}

// Bipartite with a 2-coloring that is degree-constant on each side. Each
// component's coloring may be flipped independently when searching.
inline bool is_semiregular_bipartite(const graph& g) {
    if (g.n == 0) return true;
    auto colored = bipartition(g);
    if (!colored) return false;
    auto& color = *colored;
    auto comp = component_ids(g);
    auto deg = degrees(g);
    int nc = 1 + *std::max_element(comp.begin(), comp.end());
    // per component: the two side degrees (-1 = side unused or unconstrained)
    std::vector<std::array<int, 2>> side(nc, {-1, -1});
    for (int v = 0; v < g.n; ++v) {
        int c = comp[v], s = color[v];
        if (side[c][s] == -1) side[c][s] = deg[v];
        else if (side[c][s] != deg[v]) return false;
    }
    // choose a flip per component so all components agree on a global (d0,d1)
    auto feasible = [&](int d0, int d1) {
        for (auto& sd : side) {
            bool as_is = (sd[0] == -1 || sd[0] == d0) && (sd[1] == -1 || sd[1] == d1);
            bool flip = (sd[0] == -1 || sd[0] == d1) && (sd[1] == -1 || sd[1] == d0);
            if (!as_is && !flip) return false;
        }
        return true;
    };
    // candidate degree pairs come from the first component with both sides used
    for (auto& sd : side) {
        if (sd[0] != -1 && sd[1] != -1)
            return feasible(sd[0], sd[1]) || feasible(sd[1], sd[0]);
    }
    // only single-sided components (edgeless); every degree is 0
    return true;
}

struct predicate_record {
    bool is_connected = false;
    bool is_bipartite = false;
    bool is_eulerian = false;
    bool is_claw_free = false;
    bool is_regular = false;
    bool is_semiregular_bipartite = false;
    bool is_tree = false;
    bool is_unicyclic = false;
};

inline predicate_record predicates(const graph& g) {
    predicate_record r;
    r.is_connected = is_connected(g);
    r.is_bipartite = is_bipartite(g);
    r.is_eulerian = is_eulerian(g);
    r.is_claw_free = is_claw_free(g);
    r.is_regular = is_regular(g);
    r.is_semiregular_bipartite = is_semiregular_bipartite(g);
    r.is_tree = is_tree(g);
    r.is_unicyclic = is_unicyclic(g);
    return r;
}

inline std::int64_t count_triangles(const graph& g) {
    auto adj = adjacency_lists(g);
    std::int64_t t = 0;
    for (auto [u, v] : g.edges) {
        // common neighbors w > v keep each triangle counted once
        const auto& a = adj[u];
        const auto& b = adj[v];
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j]) ++i;
            else if (a[i] > b[j]) ++j;
            else {
                if (a[i] > v) ++t;
                ++i;
                ++j;
            }
        }
    }
    return t;
}

inline std::vector<vertex_pair> find_bridges(const graph& g) {
    auto adj = adjacency_lists(g);
    std::vector<int> disc(g.n, -1), low(g.n, 0), parent(g.n, -1);
    std::vector<vertex_pair> bridges;
    int timer = 0;
    // iterative DFS to keep deep paths safe
    for (int s = 0; s < g.n; ++s) {
        if (disc[s] != -1) continue;
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        disc[s] = low[s] = timer++;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < adj[v].size()) {
                int w = adj[v][idx++];
                if (disc[w] == -1) {
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    stack.emplace_back(w, 0);
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) bridges.emplace_back(std::min(p, v), std::max(p, v));
                }
            }
        }
    }
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

inline graph disjoint_union(const graph& g, const graph& h) {
    std::vector<vertex_pair> e = g.edges;
    for (auto [u, v] : h.edges) e.emplace_back(g.n + u, g.n + v);
    return from_edge_list(g.n + h.n, std::move(e));
}

inline graph relabel(const graph& g, const std::vector<int>& perm) {
    std::vector<vertex_pair> e;
    e.reserve(g.edges.size());
    for (auto [u, v] : g.edges) e.emplace_back(perm[u], perm[v]);
    return from_edge_list(g.n, std::move(e));
}

inline graph induced_subgraph(const graph& g, const std::vector<int>& verts) {
    std::vector<int> idx(g.n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
    std::vector<vertex_pair> e;
    for (auto [u, v] : g.edges)
        if (idx[u] != -1 && idx[v] != -1) e.emplace_back(idx[u], idx[v]);
    return from_edge_list(static_cast<int>(verts.size()), std::move(e));
}

// ---------------------------------------------------------------------------
// Edge-list text format: "n m" then m lines "u v" with 0 <= u < v < n.
// Lines starting with '#' are comments.

inline graph read_edge_list(std::istream& in,
                            duplicate_policy policy = duplicate_policy::strict) {
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_line()) throw parse_error("empty edge-list input");
    std::istringstream hdr(line);
    long long n = -1, m = -1;
    if (!(hdr >> n >> m) || n < 0 || m < 0) throw parse_error("bad header line: " + line);
    std::string extra;
    if (hdr >> extra) throw parse_error("trailing tokens on header line: " + line);
    std::vector<vertex_pair> pairs;
    pairs.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        if (!next_line()) throw parse_error("expected " + std::to_string(m) + " edges, got " + std::to_string(k));
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v)) throw parse_error("bad edge line: " + line);
        if (es >> extra) throw parse_error("trailing tokens on edge line: " + line);
        if (u >= v) throw parse_error("edge line must satisfy u < v: " + line);
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return from_edge_list(static_cast<int>(n), std::move(pairs), policy);
}

inline void write_edge_list(std::ostream& out, const graph& g) {
    out << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const graph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

} // namespace sedge
