#include "lincolor/treedepth.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <unordered_map>

namespace lincolor {

TreedepthDecomposition::TreedepthDecomposition(std::vector<int> parent)
    : parent_(std::move(parent)) {
    int n = static_cast<int>(parent_.size());
    for (int p : parent_)
        if (p < -1 || p >= n) throw PreconditionError("parent id out of range");
    depth_of_.assign(n, 0);
    std::vector<int> chain;
    for (int v = 0; v < n; ++v) {
        if (depth_of_[v]) continue;
        chain.clear();
        int u = v;
        while (u >= 0 && !depth_of_[u]) {
            if (u >= n || parent_[u] == u) throw PreconditionError("parent link cycle");
            depth_of_[u] = -1;  // in progress
            chain.push_back(u);
            u = parent_[u];
            if (u >= n) throw PreconditionError("parent id out of range");
            if (u >= 0 && depth_of_[u] == -1) throw PreconditionError("parent link cycle");
        }
        int base = (u < 0) ? 0 : depth_of_[u];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth_of_[*it] = ++base;
    }
    depth_ = 0;
    for (int v = 0; v < n; ++v) depth_ = std::max(depth_, depth_of_[v]);
}

std::vector<int> TreedepthDecomposition::roots() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (parent_[v] < 0) out.push_back(v);
    return out;
}

int TreedepthDecomposition::depth() const { return depth_; }

int TreedepthDecomposition::depth_of(int v) const {
    if (v < 0 || v >= vertex_count()) throw PreconditionError("vertex id out of range");
    return depth_of_[v];
}

bool TreedepthDecomposition::is_ancestor(int a, int v) const {
    if (a == v) return true;
    while (v >= 0 && depth_of_[v] > depth_of_[a]) v = parent_[v];
    return v == a;
}

std::optional<std::pair<int, int>> check_valid(const Graph& g, const TreedepthDecomposition& t) {
    if (t.vertex_count() != g.vertex_count())
        throw PreconditionError("decomposition does not span the vertex set");
    for (auto [u, v] : g.edges())
        if (!t.is_ancestor(u, v) && !t.is_ancestor(v, u)) return std::make_pair(u, v);
    return std::nullopt;
}

Coloring canonical_coloring(const Graph& g, const TreedepthDecomposition& t) {
    if (auto bad = check_valid(g, t)) throw InvalidDecompositionError(*bad);
    int n = t.vertex_count();
    std::vector<int> root_of(n, -1);
    std::vector<int> chain;
    for (int v = 0; v < n; ++v) {
        if (root_of[v] >= 0) continue;
        chain.clear();
        int u = v;
        while (u >= 0 && root_of[u] < 0) {
            chain.push_back(u);
            u = t.parent(u);
        }
        int r = (u < 0) ? chain.back() : root_of[u];
        for (int w : chain) root_of[w] = r;
    }
    std::vector<int> height(n, 0);
    for (int v = 0; v < n; ++v) height[root_of[v]] = std::max(height[root_of[v]], t.depth_of(v));
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) colors[v] = height[root_of[v]] - t.depth_of(v) + 1;
    return Coloring(std::move(colors));
}

// Iterated center removal, centers become roots. Ties among the
// unique-colored vertices: smallest color, then smallest id.
TreedepthDecomposition canonical_decomposition(const Graph& g, const Coloring& c) {
    if (c.vertex_count() != g.vertex_count())
        throw PreconditionError("coloring does not cover the vertex set");
    int n = g.vertex_count();
    std::vector<int> parent(n, -1);
    std::vector<int> count(c.max_color() + 1, 0);
    struct Item {
        VertexSet comp;
        int attach;
    };
    std::vector<Item> stack;
    for (auto& comp : connected_components(g)) stack.push_back({std::move(comp), -1});
    while (!stack.empty()) {
        Item item = std::move(stack.back());
        stack.pop_back();
        auto members = item.comp.to_vector();
        for (int v : members) ++count[c.color(v)];
        int center = -1;
        for (int v : members)
            if (count[c.color(v)] == 1 && (center < 0 || c.color(v) < c.color(center))) center = v;
        for (int v : members) --count[c.color(v)];
        if (center < 0) throw NotCenteredError(CenteredWitness{std::move(item.comp)});
        parent[center] = item.attach;
        item.comp.erase(center);
        for (auto& sub : connected_components_within(g, item.comp))
            stack.push_back({std::move(sub), center});
    }
    return TreedepthDecomposition(std::move(parent));
}

namespace {

struct TdSolver {
    const Graph& g;
    BudgetMeter meter;

    struct Entry {
        int lb = 0;  // 0 = bounds not computed yet
        int ub = INT_MAX;
        int best_root = -1;
    };
    std::unordered_map<VertexSet, Entry, VertexSetHash> memo;

    TdSolver(const Graph& graph, SearchBudget budget) : g(graph), meter(budget) {}

    int edges_within(const std::vector<int>& members, const VertexSet& s) const {
        int m = 0;
        for (int v : members)
            for (int u : g.neighbors(v))
                if (u > v && s.contains(u)) ++m;
        return m;
    }

    int log_bound(int sz) const {
        int lb = 0;
        while ((1 << lb) < sz + 1) ++lb;
        return lb;
    }

    int greedy_clique(const VertexSet& s, const std::vector<int>& members) const {
        int seed = members[0], best_deg = -1;
        for (int v : members) {
            int d = (g.neighbor_set(v) & s).size();
            if (d > best_deg) {
                best_deg = d;
                seed = v;
            }
        }
        VertexSet cand = g.neighbor_set(seed) & s;
        int size = 1;
        while (!cand.empty()) {
            int v = cand.first();
            ++size;
            cand &= g.neighbor_set(v);
        }
        return size;
    }

    // Largest complete-binary-tree minor of a tree-shaped set (its Strahler
    // number, maximized over roots): td(B_h) = h and treedepth is
    // minor-monotone.
    int tree_strahler_bound(const VertexSet& s, const std::vector<int>& members) const {
        int best = 1;
        std::function<int(int, int)> strahler = [&](int v, int from) -> int {
            int top = 0, second = 0;
            for (int u : g.neighbors(v)) {
                if (u == from || !s.contains(u)) continue;
                int h = strahler(u, v);
                if (h > top) {
                    second = top;
                    top = h;
                } else if (h > second) {
                    second = h;
                }
            }
            if (top == 0) return 1;
            return top == second ? top + 1 : std::max(top, second + 1);
        };
        for (int r : members) best = std::max(best, strahler(r, -1));
        return best;
    }

    // Path lower bound for tree-shaped sets via the diameter (vertex count).
    int tree_diameter_bound(const VertexSet& s, const std::vector<int>& members) const {
        auto far = [&](int from) {
            std::vector<int> dist(g.vertex_count(), -1);
            std::vector<int> queue{from};
            dist[from] = 1;
            int best = from;
            for (std::size_t i = 0; i < queue.size(); ++i) {
                int v = queue[i];
                if (dist[v] > dist[best] || (dist[v] == dist[best] && v < best)) best = v;
                for (int u : g.neighbors(v))
                    if (s.contains(u) && dist[u] < 0) {
                        dist[u] = dist[v] + 1;
                        queue.push_back(u);
                    }
            }
            return std::make_pair(best, dist[best]);
        };
        auto [a, ignored] = far(members[0]);
        (void)ignored;
        auto [b, diam] = far(a);
        (void)b;
        return std::max(1, log_bound(diam));
    }

    void init_bounds(const VertexSet& s, Entry& e) {
        auto members = s.to_vector();
        int sz = static_cast<int>(members.size());
        int lb = 1;
        if (sz >= 2) lb = std::max(lb, greedy_clique(s, members));
        if (sz >= 2 && edges_within(members, s) == sz - 1) {
            lb = std::max(lb, tree_diameter_bound(s, members));
            lb = std::max(lb, tree_strahler_bound(s, members));
        }
        e.lb = lb;
        if (sz == 1) {
            e.ub = 1;
            e.best_root = members[0];
        }
    }

    // Decides td(s) <= k for connected s.
    bool can(const VertexSet& s, int k) {
        meter.tick_or_throw();
        Entry& e0 = memo[s];
        if (e0.lb == 0) init_bounds(s, e0);
        if (e0.ub <= k) return true;
        if (e0.lb > k) return false;

        auto members = s.to_vector();
        std::vector<std::pair<int, int>> order;  // (largest component after removal, v)
        order.reserve(members.size());
        for (int v : members) {
            VertexSet rest = s;
            rest.erase(v);
            int worst = 0;
            for (auto& sub : connected_components_within(g, rest)) worst = std::max(worst, sub.size());
            order.emplace_back(worst, v);
        }
        std::sort(order.begin(), order.end());

        for (auto [_, v] : order) {
            VertexSet rest = s;
            rest.erase(v);
            bool ok = true;
            for (auto& sub : connected_components_within(g, rest))
                if (!can(sub, k - 1)) {
                    ok = false;
                    break;
                }
            if (ok) {
                Entry& e = memo[s];  // re-find: recursion may rehash
                e.ub = std::min(e.ub, k);
                e.best_root = v;
                return true;
            }
        }
        Entry& e = memo[s];
        e.lb = k + 1;
        return false;
    }

    int solve(const VertexSet& comp) {
        VertexSet s = comp;
        {
            Entry& e = memo[s];
            if (e.lb == 0) init_bounds(s, e);
        }
        int k = memo[s].lb;
        while (!can(s, k)) ++k;
        return k;
    }

    void rebuild(const VertexSet& s, int attach, std::vector<int>& parent) {
        int v = memo.at(s).best_root;
        parent[v] = attach;
        VertexSet rest = s;
        rest.erase(v);
        for (auto& sub : connected_components_within(g, rest)) rebuild(sub, v, parent);
    }
};

}  // namespace

TdResult treedepth_exact(const Graph& g, SearchBudget budget) {
    TdSolver solver(g, budget);
    std::vector<int> parent(g.vertex_count(), -1);
    int depth = 0;
    for (auto& comp : connected_components(g)) {
        depth = std::max(depth, solver.solve(comp));
        solver.rebuild(comp, -1, parent);
    }
    TreedepthDecomposition t(std::move(parent));
    if (t.depth() != depth) throw Error("internal: rebuilt decomposition depth mismatch");
    return {depth, std::move(t), solver.meter.nodes()};
}

ChiCenResult chi_cen_exact(const Graph& g, SearchBudget budget) {
    TdResult td = treedepth_exact(g, budget);
    Coloring witness = canonical_coloring(g, td.decomposition);
    return {td.depth, std::move(witness), std::move(td.decomposition)};
}

TreedepthDecomposition dfs_decomposition(const Graph& g, int start) {
    int n = g.vertex_count();
    if (n == 0) return TreedepthDecomposition(std::vector<int>{});
    if (start < 0 || start >= n) throw PreconditionError("start vertex out of range");
    std::vector<int> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::function<void(int)> dfs = [&](int v) {
        seen[v] = true;
        for (int u : g.neighbors(v))
            if (!seen[u]) {
                parent[u] = v;
                dfs(u);
            }
    };
    dfs(start);
    for (int v = 0; v < n; ++v)
        if (!seen[v]) dfs(v);
    return TreedepthDecomposition(std::move(parent));
}

TreedepthDecomposition apex_restructure(const Graph& g, const TreedepthDecomposition& t,
                                        const VertexSet& s, const VertexSet& comp) {
    if (auto bad = check_valid(g, t))
        throw PreconditionError("apex_restructure: decomposition invalid at edge (" +
                                std::to_string(bad->first) + "," + std::to_string(bad->second) + ")");
    if (s.empty()) throw PreconditionError("apex_restructure: s is empty");
    if (s.intersects(comp)) throw PreconditionError("apex_restructure: s and comp overlap");
    if (connected_components_within(g, s).size() != 1)
        throw PreconditionError("apex_restructure: g[s] is not connected");
    VertexSet rest = VertexSet::full(g.vertex_count());
    rest.subtract(s);
    bool is_component = false;
    for (auto& c : connected_components_within(g, rest))
        if (c == comp) {
            is_component = true;
            break;
        }
    if (!is_component)
        throw PreconditionError("apex_restructure: comp is not a component of g minus s");
    for (int a : s.to_vector())
        if (!is_apex(g, a, comp))
            throw PreconditionError("apex_restructure: vertex " + std::to_string(a) +
                                    " is not an apex of comp");
    // Condition 2 puts all of s on one root path while condition 3 keeps its
    // internal relations; both are only satisfiable when s is already a chain.
    auto s_members = s.to_vector();
    std::sort(s_members.begin(), s_members.end(),
              [&](int a, int b) { return t.depth_of(a) < t.depth_of(b); });
    for (std::size_t i = 0; i + 1 < s_members.size(); ++i)
        if (!t.is_ancestor(s_members[i], s_members[i + 1]))
            throw PreconditionError(
                "apex_restructure: s is not a chain in t; the ancestor-preservation and "
                "s-above-comp conditions are jointly unsatisfiable");
    int deepest_s = s_members.back();

    // Stack the two restriction forests: outside keeps its nearest outside
    // ancestors, comp keeps its nearest comp ancestors and hangs below the
    // deepest s vertex. Every vertex of comp is adjacent to deepest_s, so its
    // new depth never exceeds its old one.
    std::vector<int> parent(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool inside = comp.contains(v);
        int a = t.parent(v);
        while (a >= 0 && comp.contains(a) != inside) a = t.parent(a);
        parent[v] = (a < 0 && inside) ? deepest_s : a;
    }
    return TreedepthDecomposition(std::move(parent));
}

}  // namespace lincolor
