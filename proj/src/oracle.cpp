#include "lincolor/oracle.hpp"

#include <algorithm>

namespace lincolor {

namespace {

// Backtracking over canonical colorings. A prefix is abandoned as soon as the
// newly colored vertex closes a non-centered path inside the colored prefix,
// so a completed assignment needs no final verification pass.
struct ChiLinSearch {
    const Graph& g;
    BudgetMeter meter;
    int n;
    int k = 0;
    std::vector<int> colors;
    std::vector<int> cnt;
    int unique = 0;
    std::vector<char> visited;
    bool bad = false;

    ChiLinSearch(const Graph& graph, SearchBudget budget)
        : g(graph), meter(budget), n(graph.vertex_count()), visited(graph.vertex_count(), 0) {}

    void add(int c) {
        ++cnt[c];
        if (cnt[c] == 1)
            ++unique;
        else if (cnt[c] == 2)
            --unique;
    }
    void remove(int c) {
        --cnt[c];
        if (cnt[c] == 1)
            ++unique;
        else if (cnt[c] == 0)
            --unique;
    }

    // Second arm grows away from t; on its first step only neighbors above
    // min_first are taken so each path through t is enumerated once.
    void arm2(int tip, int t, int min_first, bool first_step) {
        for (int u : g.neighbors(tip)) {
            if (u > t) break;
            if (visited[u] || (first_step && u <= min_first)) continue;
            meter.tick_or_throw();
            visited[u] = 1;
            add(colors[u]);
            if (unique == 0) bad = true;
            if (!bad) arm2(u, t, min_first, false);
            remove(colors[u]);
            visited[u] = 0;
            if (bad) return;
        }
    }

    void arm1(int tip, int t, int first1) {
        arm2(t, t, first1, true);
        if (bad) return;
        for (int u : g.neighbors(tip)) {
            if (u > t) break;
            if (visited[u]) continue;
            meter.tick_or_throw();
            visited[u] = 1;
            add(colors[u]);
            arm1(u, t, first1);
            remove(colors[u]);
            visited[u] = 0;
            if (bad) return;
        }
    }

    // Does coloring vertex t create a non-centered path within g[0..t]?
    bool closes_non_centered(int t) {
        bad = false;
        unique = 0;
        std::fill(cnt.begin(), cnt.end(), 0);
        visited[t] = 1;
        add(colors[t]);
        arm2(t, t, -1, true);
        if (!bad) {
            for (int f : g.neighbors(t)) {
                if (f > t) break;
                meter.tick_or_throw();
                visited[f] = 1;
                add(colors[f]);
                arm1(f, t, f);
                remove(colors[f]);
                visited[f] = 0;
                if (bad) break;
            }
        }
        remove(colors[t]);
        visited[t] = 0;
        return bad;
    }

    bool place(int t, int max_used) {
        if (t == n) return true;
        int lim = std::min(max_used + 1, k);
        for (int col = 1; col <= lim; ++col) {
            meter.tick_or_throw();
            colors[t] = col;
            if (!closes_non_centered(t) && place(t + 1, std::max(max_used, col))) return true;
        }
        colors[t] = 0;
        return false;
    }

    bool try_k(int target) {
        k = target;
        colors.assign(n, 0);
        cnt.assign(k + 1, 0);
        return place(0, 0);
    }
};

}  // namespace

ChiLinResult chi_lin_exact(const Graph& g, SearchBudget budget) {
    if (g.vertex_count() == 0) return {0, Coloring(std::vector<int>{}), 0};
    ChiLinSearch search(g, budget);
    for (int k = 1; k <= g.vertex_count(); ++k)
        if (search.try_k(k)) return {k, Coloring(search.colors), search.meter.nodes()};
    throw Error("internal: all-distinct coloring must be linear");
}

}  // namespace lincolor
