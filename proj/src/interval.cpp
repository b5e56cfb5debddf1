#include "lincolor/interval.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace lincolor {

bool IntervalRepresentation::overlap(int u, int v) const {
    auto [lu, ru] = intervals[u];
    auto [lv, rv] = intervals[v];
    return std::max(lu, lv) <= std::min(ru, rv);
}

Graph intersection_graph(const IntervalRepresentation& rep) {
    int n = rep.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rep.overlap(u, v)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

IntervalRepresentation restrict_intervals(const IntervalRepresentation& rep,
                                          const std::vector<int>& to_parent) {
    IntervalRepresentation out;
    out.intervals.reserve(to_parent.size());
    for (int v : to_parent) out.intervals.push_back(rep.intervals[v]);
    return out;
}

IntervalRepresentation parse_intervals(std::istream& in) {
    IntervalRepresentation rep;
    long long l, r;
    while (in >> l >> r) {
        if (l > r) throw ParseError("interval with l > r");
        rep.intervals.emplace_back(l, r);
    }
    if (!in.eof() && in.fail()) throw ParseError("malformed interval line");
    return rep;
}

IntervalRepresentation parse_intervals(const std::string& text) {
    std::istringstream in(text);
    return parse_intervals(in);
}

std::string to_interval_text(const IntervalRepresentation& rep) {
    std::ostringstream out;
    for (auto [l, r] : rep.intervals) out << l << ' ' << r << '\n';
    return out.str();
}

CliqueOrdering clique_ordering(const IntervalRepresentation& rep) {
    int n = rep.vertex_count();
    CliqueOrdering ord;
    ord.introduce.assign(n, -1);
    ord.forget.assign(n, -1);
    if (n == 0) return ord;

    // Candidate cliques are the interval sets at each left endpoint;
    // subset-dominated candidates are dropped.
    std::set<long long> points;
    for (auto [l, r] : rep.intervals) points.insert(l);
    std::vector<VertexSet> candidates;
    for (long long x : points) {
        VertexSet k(n);
        for (int v = 0; v < n; ++v)
            if (rep.intervals[v].first <= x && x <= rep.intervals[v].second) k.insert(v);
        if (candidates.empty() || !(candidates.back() == k)) candidates.push_back(std::move(k));
    }
    std::vector<bool> keep(candidates.size(), true);
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = 0; j < candidates.size() && keep[i]; ++j)
            if (i != j && keep[j] && candidates[i].is_subset_of(candidates[j]) &&
                !(candidates[i] == candidates[j]))
                keep[i] = false;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep[i]) ord.cliques.push_back(std::move(candidates[i]));

    for (int idx = 0; idx < static_cast<int>(ord.cliques.size()); ++idx)
        for (int v : ord.cliques[idx].to_vector()) {
            if (ord.introduce[v] < 0) ord.introduce[v] = idx;
            ord.forget[v] = idx;
        }
    return ord;
}

PrevailingStructure prevailing(const Graph& g, const CliqueOrdering& ord) {
    int n = g.vertex_count();
    if (n == 0) throw PreconditionError("prevailing: empty graph");
    if (connected_components(g).size() != 1) throw PreconditionError("prevailing: disconnected input");

    int m = static_cast<int>(ord.cliques.size());
    PrevailingStructure ps;
    ps.subgraph = VertexSet(n);

    auto argmax_forget = [&](int i) {
        int best = -1;
        for (int u : ord.cliques[i].to_vector())
            if (best < 0 || ord.forget[u] > ord.forget[best]) best = u;
        return best;
    };

    if (m == 1) {
        ps.path.push_back(argmax_forget(0));
        ps.subgraph |= ord.cliques[0];
    } else {
        int i = 0;
        while (i < m - 1) {
            int v = argmax_forget(i);
            ps.path.push_back(v);
            int next = ord.forget[v];
            ps.subgraph |= ord.cliques[next];
            if (next == i) break;  // single-clique residue, absorbed above
            i = next;
        }
    }

    // Gap components between consecutive forget cliques, keyed by the path
    // vertex adjacent to all of them.
    int p = static_cast<int>(ps.path.size());
    for (int j = 0; j < p; ++j) {
        int lo = (j == 0) ? 0 : ord.forget[ps.path[j - 1]] + 1;
        int hi = ord.forget[ps.path[j]] - 1;
        if (lo > hi) continue;
        VertexSet span(n);
        for (int idx = lo; idx <= hi; ++idx) span |= ord.cliques[idx];
        span.subtract(ps.subgraph);
        for (auto& comp : connected_components_within(g, span))
            ps.gaps.push_back({std::move(comp), j});
    }
    return ps;
}

Path hamiltonian_path(const PrevailingStructure& ps, const Graph& g, const CliqueOrdering& ord) {
    int p = static_cast<int>(ps.path.size());
    VertexSet on_path(g.vertex_count());
    for (int v : ps.path) on_path.insert(v);

    std::vector<std::vector<int>> blocks(p);
    for (int u : (ps.subgraph - on_path).to_vector())
        for (int j = 0; j < p; ++j) {
            int fc = ord.forget[ps.path[j]];
            if (ord.introduce[u] <= fc && fc <= ord.forget[u]) {
                blocks[j].push_back(u);
                break;
            }
        }
    std::vector<int> seq;
    for (int j = 0; j < p; ++j) {
        seq.push_back(ps.path[j]);
        std::sort(blocks[j].begin(), blocks[j].end(), [&](int a, int b) {
            if (ord.forget[a] != ord.forget[b]) return ord.forget[a] < ord.forget[b];
            return a < b;
        });
        seq.insert(seq.end(), blocks[j].begin(), blocks[j].end());
    }
    return Path(g, std::move(seq));
}

namespace {

struct Decomposer {
    const Graph& g;
    const IntervalRepresentation& rep;
    const Coloring& psi;
    std::vector<int> parent;
    bool fallback_used = false;

    Decomposer(const Graph& graph, const IntervalRepresentation& r, const Coloring& c)
        : g(graph), rep(r), psi(c), parent(graph.vertex_count(), -2) {}

    // verts: ascending original ids of a connected subgraph. Writes parents
    // for exactly those vertices; subtree roots point at attach.
    void build(const std::vector<int>& verts, int attach) {
        if (verts.size() == 1) {
            parent[verts[0]] = attach;
            return;
        }
        VertexSet vs(g.vertex_count());
        for (int v : verts) vs.insert(v);
        auto ind = induced_subgraph(g, vs);
        auto rep_local = restrict_intervals(rep, ind.to_parent);
        auto ord = clique_ordering(rep_local);
        auto ps = prevailing(ind.graph, ord);

        auto ind_q = induced_subgraph(ind.graph, ps.subgraph);
        Coloring psi_q = restrict_coloring(restrict_coloring(psi, ind.to_parent), ind_q.to_parent);
        TreedepthDecomposition tq;
        try {
            tq = canonical_decomposition(ind_q.graph, psi_q);
        } catch (const NotCenteredError& e) {
            VertexSet w(g.vertex_count());
            for (int v : e.witness.subgraph.to_vector()) w.insert(ind.to_parent[ind_q.to_parent[v]]);
            throw NotLinearError(CenteredWitness{std::move(w)});
        }

        std::vector<int> q_local_of(ind.graph.vertex_count(), -1);
        for (std::size_t i = 0; i < ind_q.to_parent.size(); ++i)
            q_local_of[ind_q.to_parent[i]] = static_cast<int>(i);

        // All gap neighborhoods must be ancestor chains in tq, else this
        // whole component is rebuilt via the separator fallback.
        std::vector<int> attach_at(ps.gaps.size());
        for (std::size_t gi = 0; gi < ps.gaps.size(); ++gi) {
            VertexSet nb = neighborhood(ind.graph, ps.gaps[gi].component);
            int deepest = -1;
            bool chain = true;
            std::vector<int> members;
            for (int v : nb.to_vector()) members.push_back(q_local_of[v]);
            std::sort(members.begin(), members.end(),
                      [&](int a, int b) { return tq.depth_of(a) < tq.depth_of(b); });
            for (std::size_t i = 0; i + 1 < members.size(); ++i)
                if (!tq.is_ancestor(members[i], members[i + 1])) {
                    chain = false;
                    break;
                }
            if (!chain) {
                fallback_used = true;
                fallback(verts, attach);
                return;
            }
            deepest = members.back();
            attach_at[gi] = ind.to_parent[ind_q.to_parent[deepest]];
        }

        for (int v = 0; v < ind_q.graph.vertex_count(); ++v) {
            int orig = ind.to_parent[ind_q.to_parent[v]];
            parent[orig] = tq.parent(v) < 0 ? attach : ind.to_parent[ind_q.to_parent[tq.parent(v)]];
        }
        for (std::size_t gi = 0; gi < ps.gaps.size(); ++gi) {
            std::vector<int> sub;
            for (int v : ps.gaps[gi].component.to_vector()) sub.push_back(ind.to_parent[v]);
            build(sub, attach_at[gi]);
        }
    }

    // Balanced clique-separator rebuild: chain the middle prevailing clique,
    // recurse on the remaining components below it.
    void fallback(const std::vector<int>& verts, int attach) {
        VertexSet vs(g.vertex_count());
        for (int v : verts) vs.insert(v);
        auto ind = induced_subgraph(g, vs);
        auto rep_local = restrict_intervals(rep, ind.to_parent);
        auto ord = clique_ordering(rep_local);
        auto ps = prevailing(ind.graph, ord);

        int jmid = static_cast<int>(ps.path.size()) / 2;
        VertexSet sep = ord.cliques[ord.forget[ps.path[jmid]]];
        std::vector<int> chain = sep.to_vector();
        std::sort(chain.begin(), chain.end(), [&](int a, int b) {
            int ca = psi.color(ind.to_parent[a]), cb = psi.color(ind.to_parent[b]);
            if (ca != cb) return ca < cb;
            return a < b;
        });
        int prev = attach;
        for (int v : chain) {
            parent[ind.to_parent[v]] = prev;
            prev = ind.to_parent[v];
        }
        VertexSet rest = VertexSet::full(ind.graph.vertex_count());
        rest.subtract(sep);
        for (auto& comp : connected_components_within(ind.graph, rest)) {
            std::vector<int> sub;
            for (int v : comp.to_vector()) sub.push_back(ind.to_parent[v]);
            build(sub, prev);
        }
    }
};

}  // namespace

CenteredFromLinearResult centered_from_linear(const Graph& g, const IntervalRepresentation& rep,
                                              const Coloring& psi) {
    if (rep.vertex_count() != g.vertex_count() || psi.vertex_count() != g.vertex_count())
        throw PreconditionError("graph, intervals and coloring sizes differ");
    Graph check = intersection_graph(rep);
    if (!(check.edges() == g.edges()))
        throw PreconditionError("graph does not match the interval representation");

    Decomposer dec(g, rep, psi);
    for (auto& comp : connected_components(g)) dec.build(comp.to_vector(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dec.parent[v] == -2) throw Error("internal: vertex left out of the decomposition");
    TreedepthDecomposition t(std::move(dec.parent));
    if (auto bad = check_valid(g, t))
        throw Error("internal: interval decomposition invalid at edge (" +
                    std::to_string(bad->first) + "," + std::to_string(bad->second) + ")");
    int k = psi.size();
    int depth = t.depth();
    return {std::move(t), k, depth, dec.fallback_used};
}

}  // namespace lincolor
