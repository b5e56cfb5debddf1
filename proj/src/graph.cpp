#include "lincolor/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "lincolor/coloring.hpp"

namespace lincolor {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw PreconditionError("negative vertex count");
    adj_.assign(n, {});
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw PreconditionError("edge endpoint out of range");
        if (u == v) throw PreconditionError("self-loop rejected");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    adj_mask_.assign(n, VertexSet(n));
    for (int v = 0; v < n; ++v)
        for (int u : adj_[v]) adj_mask_[v].insert(u);
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return adj_mask_[u].contains(v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw PreconditionError("vertex id out of range");
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    auto g = path(n);
    auto e = g.edges();
    e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph Graph::star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, std::move(e));
}

Graph Graph::complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, std::move(e));
}

Path::Path(const Graph& g, std::vector<int> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw PreconditionError("empty path");
    std::vector<bool> seen(g.vertex_count(), false);
    for (int v : vertices_) {
        if (v < 0 || v >= g.vertex_count()) throw PreconditionError("path vertex out of range");
        if (seen[v]) throw PreconditionError("path repeats vertex " + std::to_string(v));
        seen[v] = true;
    }
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
        if (!g.has_edge(vertices_[i], vertices_[i + 1]))
            throw PreconditionError("non-adjacent consecutive pair (" +
                                    std::to_string(vertices_[i]) + "," +
                                    std::to_string(vertices_[i + 1]) + ")");
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw PreconditionError("vertex set universe does not match graph");
    std::vector<int> to_parent = s.to_vector();
    std::vector<int> from_parent(g.vertex_count(), -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i) from_parent[to_parent[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (from_parent[u] >= 0 && from_parent[v] >= 0)
            edges.emplace_back(from_parent[u], from_parent[v]);
    return InducedSubgraph{Graph(static_cast<int>(to_parent.size()), std::move(edges)),
                           std::move(to_parent)};
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return connected_components_within(g, VertexSet::full(g.vertex_count()));
}

std::vector<VertexSet> connected_components_within(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw PreconditionError("vertex set universe does not match graph");
    int n = g.vertex_count();
    std::vector<bool> done(n, false);
    std::vector<VertexSet> comps;
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        if (done[v] || !s.contains(v)) continue;
        VertexSet comp(n);
        stack.push_back(v);
        done[v] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.insert(u);
            for (int w : g.neighbors(u))
                if (s.contains(w) && !done[w]) {
                    done[w] = true;
                    stack.push_back(w);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw PreconditionError("vertex set universe does not match graph");
    VertexSet out(g.vertex_count());
    for (int v : s.to_vector()) out |= g.neighbor_set(v);
    out.subtract(s);
    return out;
}

bool is_apex(const Graph& g, int a, const VertexSet& h) {
    if (h.universe() != g.vertex_count())
        throw PreconditionError("vertex set universe does not match graph");
    if (a < 0 || a >= g.vertex_count()) throw PreconditionError("vertex id out of range");
    if (h.contains(a)) throw PreconditionError("apex candidate inside the subgraph");
    return h.is_subset_of(g.neighbor_set(a));
}

bool is_forest(const Graph& g) {
    auto comps = connected_components(g);
    return g.edge_count() == g.vertex_count() - static_cast<int>(comps.size());
}

Graph parse_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw ParseError("edge list: negative counts");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw ParseError("edge list: truncated after " + std::to_string(i) + " edges");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_dot(const Graph& g, const Coloring* coloring) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (coloring) out << " [color=" << coloring->color(v) << "]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace lincolor
