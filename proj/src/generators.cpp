#include "lincolor/generators.hpp"

#include <algorithm>

namespace lincolor {

namespace {

struct RcPart {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> colors;
};

RcPart build_rclique(int i) {
    if (i == 0) return {};
    int p = (i - 1) / 2;
    RcPart sub = build_rclique(p);
    RcPart out;
    out.n = i + i * sub.n;
    out.colors.resize(out.n);
    for (int j = 1; j <= i; ++j) out.colors[j - 1] = j;
    for (int a = 0; a < i; ++a)
        for (int b = a + 1; b < i; ++b) out.edges.emplace_back(a, b);
    for (int j = 1; j <= i; ++j) {
        int base = i + (j - 1) * sub.n;
        for (auto [u, v] : sub.edges) out.edges.emplace_back(base + u, base + v);
        for (int t = 0; t < sub.n; ++t) {
            out.edges.emplace_back(j - 1, base + t);
            out.colors[base + t] = 1 + (j + sub.colors[t]) % i;
        }
    }
    return out;
}

int level_in_btree(int v, int levels) {
    int depth = 0;
    while ((2 << depth) - 1 <= v) ++depth;
    return levels - depth;
}

}  // namespace

LabeledFamilyInstance gen_recursive_clique(int i) {
    if (i < 1) throw PreconditionError("rclique index must be at least 1");
    RcPart part = build_rclique(i);
    LabeledFamilyInstance out;
    out.graph = Graph(part.n, std::move(part.edges));
    out.coloring = Coloring(std::move(part.colors));
    out.family = "rclique";
    int p = (i - 1) / 2;
    out.params = {{"i", i}, {"p", p}, {"n", part.n}};
    out.roles.assign(part.n, "");
    int sub_n = p == 0 ? 0 : build_rclique(p).n;
    for (int j = 1; j <= i; ++j) {
        out.roles[j - 1] = "v" + std::to_string(j);
        for (int t = 0; t < sub_n; ++t) out.roles[i + (j - 1) * sub_n + t] = "H" + std::to_string(j);
    }
    return out;
}

Graph gen_complete_binary_tree(int levels) {
    if (levels < 1) throw PreconditionError("binary tree needs at least 1 level");
    int n = (1 << levels) - 1;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        if (2 * v + 1 < n) edges.emplace_back(v, 2 * v + 1);
        if (2 * v + 2 < n) edges.emplace_back(v, 2 * v + 2);
    }
    return Graph(n, std::move(edges));
}

PsiPattern psi_pattern(int a) {
    if (a < 1) throw PreconditionError("pattern parameter must be at least 1");
    if (a > 20) throw PreconditionError("pattern parameter too large");
    PsiPattern pat;
    pat.a = a;
    long long two_a = 1ll << a;
    int b = 1;
    long long three_b = 3;
    while (three_b <= two_a) {
        ++b;
        three_b *= 3;
    }
    pat.b = b;

    pat.subsets.resize(1u << b);
    for (std::uint32_t m = 0; m < pat.subsets.size(); ++m) pat.subsets[m] = m;
    std::stable_sort(pat.subsets.begin(), pat.subsets.end(), [](std::uint32_t x, std::uint32_t y) {
        int px = __builtin_popcount(x), py = __builtin_popcount(y);
        if (px != py) return px > py;
        return x < y;
    });

    long long target = 1ll << (a - 1);
    long long sum = 0;
    int ell = 0;
    while (sum < target) {
        std::uint32_t c = pat.subsets[ell];
        if (c == 0) throw Error("internal: pattern prefix ran out of nonempty subsets");
        sum += 1ll << (__builtin_popcount(c) - 1);
        ++ell;
    }
    if (sum != target) throw Error("internal: pattern prefix does not hit 2^(a-1)");
    pat.ell = ell;

    int n = (1 << a) - 1;
    pat.assignment.assign(n, 0);
    long long leaf_cursor = 0;
    for (int idx = 0; idx < ell; ++idx) {
        std::uint32_t c = pat.subsets[idx];
        int h = __builtin_popcount(c);
        long long block = 1ll << (h - 1);
        if (leaf_cursor % block != 0) throw Error("internal: unaligned pattern block");
        int dd = a - h;
        int root = (1 << dd) - 1 + static_cast<int>(leaf_cursor / block);
        std::vector<int> colors_sorted;
        for (int bit = 0; bit < b; ++bit)
            if (c & (1u << bit)) colors_sorted.push_back(bit + 1);
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            int lvl = level_in_btree(w, a);
            pat.assignment[w] = colors_sorted[lvl - 1];
            if (lvl > 1) {
                stack.push_back(2 * w + 1);
                stack.push_back(2 * w + 2);
            }
        }
        leaf_cursor += block;
    }
    pat.local_count = static_cast<int>(std::count(pat.assignment.begin(), pat.assignment.end(), 0));
    return pat;
}

LabeledFamilyInstance striped_btree_coloring(int a, int d) {
    if (a < 1) throw PreconditionError("stripe height must be at least 1");
    if (d < 2) throw PreconditionError("need at least 2 stripes");
    PsiPattern pat = psi_pattern(a);
    int levels = a * d;
    if (levels > 24) throw PreconditionError("tree too large");
    Graph tree = gen_complete_binary_tree(levels);
    int n = tree.vertex_count();
    std::vector<int> colors(n, 0);
    std::vector<std::string> roles(n);
    int global_palette = d * pat.b;

    for (int stripe = 1; stripe <= d; ++stripe) {
        int root_depth = levels - stripe * a;
        int first_root = (1 << root_depth) - 1;
        int root_count = 1 << root_depth;
        int local_base = global_palette + (stripe % 2 == 1 ? 0 : pat.local_count);
        for (int r = first_root; r < first_root + root_count; ++r) {
            int next_local = 0;
            for (int li = 0; li < (1 << a) - 1; ++li) {
                int dd = 0;
                while ((2 << dd) - 1 <= li) ++dd;
                int pos = li - ((1 << dd) - 1);
                int global_v = (r + 1) * (1 << dd) - 1 + pos;
                if (pat.assignment[li] == 0) {
                    colors[global_v] = local_base + (++next_local);
                    roles[global_v] = "stripe" + std::to_string(stripe) + "/local";
                } else {
                    colors[global_v] = (stripe - 1) * pat.b + pat.assignment[li];
                    roles[global_v] = "stripe" + std::to_string(stripe) + "/global";
                }
            }
        }
    }

    LabeledFamilyInstance out;
    out.graph = std::move(tree);
    out.coloring = Coloring(std::move(colors));
    out.family = "striped-btree";
    out.params = {{"a", a},
                  {"d", d},
                  {"b", pat.b},
                  {"p", pat.local_count},
                  {"levels", levels},
                  {"colors", global_palette + 2 * pat.local_count}};
    out.roles = std::move(roles);
    return out;
}

LabeledFamilyInstance subdivide_with_new_color(const Graph& g, const Coloring& c) {
    if (c.vertex_count() != g.vertex_count())
        throw PreconditionError("coloring does not cover the vertex set");
    int n = g.vertex_count();
    int fresh = c.max_color() + 1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> colors(c.colors());
    std::vector<std::string> roles(n);
    for (int v = 0; v < n; ++v) roles[v] = "orig" + std::to_string(v);
    int next = n;
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, next);
        edges.emplace_back(next, v);
        colors.push_back(fresh);
        roles.push_back("sub" + std::to_string(u) + "-" + std::to_string(v));
        ++next;
    }
    LabeledFamilyInstance out;
    out.graph = Graph(next, std::move(edges));
    out.coloring = Coloring(std::move(colors));
    out.family = "subdivision";
    out.params = {{"n", n}, {"m", g.edge_count()}, {"fresh_color", fresh}};
    out.roles = std::move(roles);
    return out;
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("tree needs at least 1 vertex");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rng.below_int(v), v);
    return Graph(n, std::move(edges));
}

RandomInterval random_interval(int n, long long span, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("need at least 1 vertex");
    if (span < 1) throw PreconditionError("span must be positive");
    Rng rng(seed);
    IntervalRepresentation rep;
    for (int v = 0; v < n; ++v) {
        long long x = static_cast<long long>(rng.below(static_cast<std::uint64_t>(span)));
        long long y = static_cast<long long>(rng.below(static_cast<std::uint64_t>(span)));
        rep.intervals.emplace_back(std::min(x, y), std::max(x, y));
    }
    return {intersection_graph(rep), std::move(rep)};
}

}  // namespace lincolor
