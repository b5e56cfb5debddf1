#include "lincolor/tree_ranking.hpp"

#include <algorithm>
#include <map>

namespace lincolor {

RankList::RankList(std::vector<int> ranks) : ranks_(std::move(ranks)) {
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
        if (ranks_[i] < 1) throw PreconditionError("ranks must be positive");
        if (i > 0 && ranks_[i] <= ranks_[i - 1])
            throw PreconditionError("rank list must be strictly increasing");
    }
}

bool RankList::contains(int r) const {
    return std::binary_search(ranks_.begin(), ranks_.end(), r);
}

namespace {

struct MergeDetail {
    int x;
    int rank;
    RankList list;
};

MergeDetail merge_detail(const std::vector<RankList>& children) {
    std::map<int, int> on_lists;
    for (const auto& l : children)
        for (int r : l.ranks()) ++on_lists[r];
    int x = 0;
    std::vector<int> uni;
    for (auto& [r, c] : on_lists) {
        uni.push_back(r);
        if (c >= 2) x = std::max(x, r);
    }
    int rank = x + 1;
    while (std::binary_search(uni.begin(), uni.end(), rank)) ++rank;
    std::vector<int> out{rank};
    for (int r : uni)
        if (r > rank) out.push_back(r);
    return {x, rank, RankList(std::move(out))};
}

void check_tree(const Graph& g) {
    if (g.vertex_count() == 0) throw NotATreeError("empty graph is not a tree");
    if (g.edge_count() != g.vertex_count() - 1 || connected_components(g).size() != 1)
        throw NotATreeError("input is not a tree");
}

// BFS order from the root; reversing it processes children before parents.
std::pair<std::vector<int>, std::vector<int>> rooted_order(const Graph& g, int root) {
    std::vector<int> parent(g.vertex_count(), -1), order;
    std::vector<bool> seen(g.vertex_count(), false);
    order.push_back(root);
    seen[root] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int u : g.neighbors(order[i]))
            if (!seen[u]) {
                seen[u] = true;
                parent[u] = order[i];
                order.push_back(u);
            }
    return {std::move(order), std::move(parent)};
}

}  // namespace

std::pair<int, RankList> merge_rank_lists(const std::vector<RankList>& children) {
    auto d = merge_detail(children);
    return {d.rank, std::move(d.list)};
}

SchafferResult schaffer_rank(const Graph& tree, int root, bool with_trace) {
    check_tree(tree);
    int n = tree.vertex_count();
    if (root < 0) {
        root = 0;
        for (int v = 0; v < n; ++v)
            if (tree.degree(v) <= 1) {
                root = v;
                break;
            }
    } else if (root >= n) {
        throw PreconditionError("root out of range");
    }

    auto [order, parent] = rooted_order(tree, root);
    SchafferResult res;
    res.root = root;
    res.rank.assign(n, 0);
    res.list.assign(n, RankList());
    std::vector<std::vector<RankList>> child_lists(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        auto d = merge_detail(child_lists[v]);
        res.rank[v] = d.rank;
        res.list[v] = d.list;
        if (with_trace) res.trace.push_back({v, child_lists[v], d.x, d.rank, d.list});
        if (parent[v] >= 0) child_lists[parent[v]].push_back(d.list);
    }
    res.size = *std::max_element(res.rank.begin(), res.rank.end());
    return res;
}

std::uint64_t zeta(const RankList& l) {
    std::uint64_t z = 0;
    for (int r : l.ranks()) {
        if (r > 62) throw Error("rank too large for the zeta potential");
        z += 1ull << r;
    }
    return z;
}

ColorSetFamily compatible_sets(const Graph& tree, int root, const Coloring& psi) {
    check_tree(tree);
    if (psi.vertex_count() != tree.vertex_count())
        throw PreconditionError("coloring does not cover the vertex set");
    if (root < 0 || root >= tree.vertex_count()) throw PreconditionError("root out of range");
    if (psi.max_color() > 63) throw PreconditionError("palette too large for bitmask families");

    auto [order, parent] = rooted_order(tree, root);
    int n = tree.vertex_count();
    ColorSetFamily fam(n);
    std::vector<std::vector<std::uint64_t>> child_union(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::uint64_t bit = 1ull << (psi.color(v) - 1);
        auto& sprime = child_union[v];
        std::sort(sprime.begin(), sprime.end());
        sprime.erase(std::unique(sprime.begin(), sprime.end()), sprime.end());
        std::vector<std::uint64_t> out;
        out.reserve(sprime.size() + 1);
        for (std::uint64_t x : sprime) {
            if ((x & bit) && std::binary_search(sprime.begin(), sprime.end(), x & ~bit))
                out.push_back(x & ~bit);
            else
                out.push_back(x | bit);
        }
        out.push_back(bit);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        fam[v] = out;
        if (parent[v] >= 0) {
            auto& up = child_union[parent[v]];
            up.insert(up.end(), out.begin(), out.end());
        }
        child_union[v].clear();
    }
    return fam;
}

std::vector<std::uint64_t> rho(const ColorSetFamily& family, int delta) {
    if (delta < 3) throw PreconditionError("rho requires maximum degree at least 3");
    std::uint64_t base = static_cast<std::uint64_t>(delta - 1);
    std::vector<std::uint64_t> out;
    out.reserve(family.size());
    for (const auto& sets : family) {
        std::uint64_t total = 0;
        for (std::uint64_t x : sets) {
            std::uint64_t term = 1;
            for (int i = 0; i < __builtin_popcountll(x); ++i) {
                if (term > UINT64_MAX / base) throw Error("rho overflow");
                term *= base;
            }
            if (total > UINT64_MAX - term) throw Error("rho overflow");
            total += term;
        }
        out.push_back(total);
    }
    return out;
}

}  // namespace lincolor
