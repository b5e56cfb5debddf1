#pragma once

// Test-only brute-force oracles. These stay independent of the library search
// code: plain enumeration, no pruning, no memoization.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "lincolor/coloring.hpp"
#include "lincolor/common.hpp"
#include "lincolor/graph.hpp"

namespace testsupport {

// Every simple path as a vertex sequence, each undirected path reported once
// (first endpoint <= last endpoint). Includes single vertices.
inline void for_each_simple_path(const lincolor::Graph& g,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    int n = g.vertex_count();
    std::vector<int> path;
    std::vector<bool> used(n, false);
    std::function<void(int)> extend = [&](int v) {
        path.push_back(v);
        used[v] = true;
        if (path.front() <= path.back()) fn(path);
        for (int u : g.neighbors(v))
            if (!used[u]) extend(u);
        used[v] = false;
        path.pop_back();
    };
    for (int s = 0; s < n; ++s) extend(s);
}

inline bool path_has_center(const std::vector<int>& path, const lincolor::Coloring& c) {
    std::map<int, int> count;
    for (int v : path) ++count[c.color(v)];
    for (auto [color, k] : count)
        if (k == 1) return true;
    return false;
}

inline bool naive_is_linear(const lincolor::Graph& g, const lincolor::Coloring& c) {
    bool ok = true;
    for_each_simple_path(g, [&](const std::vector<int>& p) {
        if (!path_has_center(p, c)) ok = false;
    });
    return ok;
}

inline bool subset_connected(const lincolor::Graph& g, unsigned mask) {
    if (mask == 0) return false;
    int start = __builtin_ctz(mask);
    unsigned seen = 1u << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if ((mask >> u) & 1u && !((seen >> u) & 1u)) {
                seen |= 1u << u;
                stack.push_back(u);
            }
    }
    return seen == mask;
}

inline bool naive_is_centered(const lincolor::Graph& g, const lincolor::Coloring& c) {
    int n = g.vertex_count();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!subset_connected(g, mask)) continue;
        std::map<int, int> count;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) ++count[c.color(v)];
        bool has_center = false;
        for (auto [color, k] : count)
            if (k == 1) has_center = true;
        if (!has_center) return false;
    }
    return true;
}

// Minimum number of colors of a linear coloring, by scanning every canonical
// coloring (set partition) of the vertex set. Feasible to n ~ 8.
inline int naive_chi_lin(const lincolor::Graph& g) {
    int n = g.vertex_count();
    std::vector<int> colors(n, 0);
    int best = n + 1;
    std::function<void(int, int)> assign = [&](int t, int max_used) {
        if (max_used >= best) return;
        if (t == n) {
            if (naive_is_linear(g, lincolor::Coloring(colors))) best = std::min(best, max_used);
            return;
        }
        for (int col = 1; col <= std::min(max_used + 1, n); ++col) {
            colors[t] = col;
            assign(t + 1, std::max(max_used, col));
        }
    };
    assign(0, 0);
    return best;
}

// Exact treedepth by the plain root recursion, no memoization. n <= 8.
inline int naive_treedepth_rec(const lincolor::Graph& g, unsigned mask) {
    int sz = __builtin_popcount(mask);
    if (sz == 0) return 0;
    if (sz == 1) return 1;
    // split into components first
    unsigned remaining = mask;
    int worst = 0;
    bool split = false;
    while (remaining) {
        int start = __builtin_ctz(remaining);
        unsigned comp = 1u << start;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v))
                if ((mask >> u) & 1u && !((comp >> u) & 1u)) {
                    comp |= 1u << u;
                    stack.push_back(u);
                }
        }
        if (comp != mask) split = true;
        worst = std::max(worst, split ? naive_treedepth_rec(g, comp) : 0);
        remaining &= ~comp;
        if (!split) break;
    }
    if (split) return worst;
    int best = sz;
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((mask >> v) & 1u) best = std::min(best, 1 + naive_treedepth_rec(g, mask & ~(1u << v)));
    return best;
}

inline int naive_treedepth(const lincolor::Graph& g) {
    if (g.vertex_count() == 0) return 0;
    return naive_treedepth_rec(g, (1u << g.vertex_count()) - 1);
}

// Union-find component partition, the cross-check for the graph module.
inline std::vector<int> union_find_components(int n,
                                              const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> root(n);
    for (int i = 0; i < n; ++i) root[i] = i;
    std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
    for (auto [u, v] : edges) root[find(u)] = find(v);
    for (int i = 0; i < n; ++i) root[i] = find(i);
    return root;
}

inline bool is_bipartite(const lincolor::Graph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    stack.push_back(u);
                } else if (side[u] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline int degeneracy(const lincolor::Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<bool> gone(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int best = 0;
    for (int round = 0; round < n; ++round) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
        best = std::max(best, deg[pick]);
        gone[pick] = true;
        for (int u : g.neighbors(pick))
            if (!gone[u]) --deg[u];
    }
    return best;
}

// Seeded random graph with edge probability num/den.
inline lincolor::Graph random_graph(int n, std::uint64_t seed, int num = 1, int den = 2) {
    lincolor::Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng.below(static_cast<std::uint64_t>(den))) < num)
                edges.emplace_back(u, v);
    return lincolor::Graph(n, std::move(edges));
}

inline lincolor::Coloring random_coloring(int n, int k, std::uint64_t seed) {
    lincolor::Rng rng(seed);
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) colors[v] = 1 + rng.below_int(k);
    return lincolor::Coloring(std::move(colors));
}

// Random tree with maximum degree bound.
inline lincolor::Graph random_bounded_degree_tree(int n, int max_degree, std::uint64_t seed) {
    lincolor::Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(n, 0);
    for (int v = 1; v < n; ++v) {
        std::vector<int> eligible;
        for (int u = 0; u < v; ++u)
            if (deg[u] < max_degree) eligible.push_back(u);
        int p = eligible[rng.below(eligible.size())];
        edges.emplace_back(p, v);
        ++deg[p];
        ++deg[v];
    }
    return lincolor::Graph(n, std::move(edges));
}

// Random cograph via union/join recursion.
inline lincolor::Graph random_cograph(int n, std::uint64_t seed) {
    lincolor::Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::function<void(std::vector<int>)> build = [&](std::vector<int> verts) {
        if (verts.size() <= 1) return;
        std::size_t cut = 1 + rng.below(verts.size() - 1);
        std::vector<int> left(verts.begin(), verts.begin() + cut);
        std::vector<int> right(verts.begin() + cut, verts.end());
        bool join = rng.below(2) == 0;
        if (join)
            for (int u : left)
                for (int v : right) edges.emplace_back(u, v);
        build(left);
        build(right);
    };
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    build(verts);
    return lincolor::Graph(n, std::move(edges));
}

}  // namespace testsupport
