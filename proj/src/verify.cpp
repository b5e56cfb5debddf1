#include "lincolor/verify.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace lincolor {

namespace {

void check_total(const Graph& g, const Coloring& c) {
    if (c.vertex_count() != g.vertex_count())
        throw PreconditionError("coloring does not cover the vertex set");
}

// Tracks color multiplicities of the current path and how many colors occur
// exactly once.
struct ColorCounter {
    explicit ColorCounter(int max_color) : cnt(max_color + 1, 0) {}

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

    std::vector<int> cnt;
    int unique = 0;
};

struct GeneralSearch {
    const Graph& g;
    const Coloring& c;
    BudgetMeter meter;
    ColorCounter counter;
    std::vector<char> visited;
    std::uint64_t visited_mask = 0;
    std::vector<int> stack;
    std::optional<std::vector<int>> witness;
    bool aborted = false;
    bool use_memo;
    std::unordered_map<std::uint64_t, std::uint64_t> memo;  // visited set -> endpoint mask
    static constexpr std::size_t kMemoCap = 1u << 22;

    GeneralSearch(const Graph& graph, const Coloring& coloring, SearchBudget budget)
        : g(graph),
          c(coloring),
          meter(budget),
          counter(coloring.max_color()),
          visited(graph.vertex_count(), 0),
          use_memo(graph.vertex_count() <= 64) {}

    void run() {
        for (int s = 0; s < g.vertex_count() && !witness && !aborted; ++s) dfs(s);
    }

    void dfs(int v) {
        if (!meter.tick()) {
            aborted = true;
            return;
        }
        visited[v] = 1;
        if (use_memo) visited_mask |= 1ull << v;
        stack.push_back(v);
        counter.add(c.color(v));

        bool skip = false;
        if (use_memo) {
            auto it = memo.find(visited_mask);
            std::uint64_t bit = 1ull << v;
            if (it != memo.end()) {
                if (it->second & bit)
                    skip = true;
                else
                    it->second |= bit;
            } else if (memo.size() < kMemoCap) {
                memo.emplace(visited_mask, bit);
            }
        }

        if (!skip) {
            if (stack.size() >= 2 && counter.unique == 0) witness = stack;
            if (!witness) {
                for (int u : g.neighbors(v)) {
                    if (visited[u]) continue;
                    dfs(u);
                    if (witness || aborted) break;
                }
            }
        }

        counter.remove(c.color(v));
        stack.pop_back();
        visited[v] = 0;
        if (use_memo) visited_mask &= ~(1ull << v);
    }
};

struct ForestSearch {
    const Graph& g;
    const Coloring& c;
    BudgetMeter meter;
    std::vector<int> parent, depth, comp;
    std::optional<std::vector<int>> witness;
    bool aborted = false;

    ForestSearch(const Graph& graph, const Coloring& coloring, SearchBudget budget)
        : g(graph), c(coloring), meter(budget) {
        int n = g.vertex_count();
        parent.assign(n, -1);
        depth.assign(n, 0);
        comp.assign(n, -1);
        std::vector<int> stack;
        int comp_id = 0;
        for (int r = 0; r < n; ++r) {
            if (comp[r] >= 0) continue;
            comp[r] = comp_id;
            depth[r] = 0;
            stack.push_back(r);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : g.neighbors(v))
                    if (comp[u] < 0) {
                        comp[u] = comp_id;
                        parent[u] = v;
                        depth[u] = depth[v] + 1;
                        stack.push_back(u);
                    }
            }
            ++comp_id;
        }
    }

    void run() {
        int n = g.vertex_count();
        ColorCounter counter(c.max_color());
        std::vector<int> up, down, path;
        for (int u = 0; u < n; ++u) {
            bool found_for_u = false;
            for (int v = u + 1; v < n; ++v) {
                if (comp[u] != comp[v]) continue;
                if (!meter.tick()) {
                    aborted = true;
                    return;
                }
                up.clear();
                down.clear();
                int a = u, b = v;
                while (depth[a] > depth[b]) {
                    up.push_back(a);
                    a = parent[a];
                }
                while (depth[b] > depth[a]) {
                    down.push_back(b);
                    b = parent[b];
                }
                while (a != b) {
                    up.push_back(a);
                    down.push_back(b);
                    a = parent[a];
                    b = parent[b];
                }
                path = up;
                path.push_back(a);
                path.insert(path.end(), down.rbegin(), down.rend());

                for (int w : path) counter.add(c.color(w));
                bool centered = counter.unique > 0;
                for (int w : path) counter.remove(c.color(w));
                if (!centered) {
                    if (!witness || path < *witness) witness = path;
                    found_for_u = true;
                }
            }
            if (found_for_u) return;
        }
    }
};

}  // namespace

CenteredCheck verify_centered(const Graph& g, const Coloring& c) {
    check_total(g, c);
    std::vector<int> count(c.max_color() + 1, 0);
    std::deque<VertexSet> queue;
    for (auto& comp : connected_components(g)) queue.push_back(std::move(comp));
    while (!queue.empty()) {
        VertexSet comp = std::move(queue.front());
        queue.pop_front();
        auto members = comp.to_vector();
        for (int v : members) ++count[c.color(v)];
        int center = -1;
        for (int v : members) {
            if (count[c.color(v)] != 1) continue;
            if (center < 0 || c.color(v) < c.color(center)) center = v;
        }
        for (int v : members) --count[c.color(v)];
        if (center < 0) return {false, CenteredWitness{std::move(comp)}};
        comp.erase(center);
        for (auto& sub : connected_components_within(g, comp)) queue.push_back(std::move(sub));
    }
    return {true, std::nullopt};
}

LinearCheck verify_linear(const Graph& g, const Coloring& c, SearchBudget budget) {
    check_total(g, c);
    LinearCheck out;
    std::optional<std::vector<int>> witness;
    bool aborted = false;
    if (is_forest(g)) {
        ForestSearch fs(g, c, budget);
        fs.run();
        witness = std::move(fs.witness);
        aborted = fs.aborted;
        out.stats.nodes = fs.meter.nodes();
        out.used_forest_route = true;
    } else {
        GeneralSearch gs(g, c, budget);
        gs.run();
        witness = std::move(gs.witness);
        aborted = gs.aborted;
        out.stats.nodes = gs.meter.nodes();
    }
    if (witness) {
        out.status = VerifyStatus::Witness;
        out.witness = make_non_centered_path(g, c, *witness);
    } else if (aborted) {
        out.status = VerifyStatus::BudgetExceeded;
        out.stats.budget_hit = true;
    } else {
        out.status = VerifyStatus::Ok;
    }
    return out;
}

bool check_certificate(const Path& p, const Coloring& c) {
    std::unordered_map<int, int> count;
    for (int v : p.vertices()) ++count[c.color(v)];
    for (auto& [color, k] : count)
        if (k < 2) return false;
    return true;
}

NonCenteredPath make_non_centered_path(const Graph& g, const Coloring& c,
                                       const std::vector<int>& vertices) {
    Path p(g, vertices);
    NonCenteredPath out;
    out.path = p.vertices();
    for (int v : out.path) ++out.multiplicities[c.color(v)];
    for (auto& [color, k] : out.multiplicities)
        if (k < 2)
            throw PreconditionError("color " + std::to_string(color) +
                                    " appears uniquely on the path");
    return out;
}

}  // namespace lincolor
