#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lincolor/vertex_set.hpp"

namespace lincolor {

class Coloring;

// Simple undirected graph over vertices 0..n-1. Immutable after construction;
// adjacency lists are sorted ascending and symmetric, edges are stored with
// u < v in lexicographic order.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::span<const int> neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    const VertexSet& neighbor_set(int v) const { return adj_mask_[v]; }

    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph star(int leaves);
    static Graph complete_bipartite(int a, int b);

  private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> adj_mask_;
};

// Simple path in a host graph: distinct vertices, consecutive pairs adjacent.
// Validated against the host at construction.
class Path {
  public:
    Path(const Graph& g, std::vector<int> vertices);

    const std::vector<int>& vertices() const { return vertices_; }
    int length() const { return static_cast<int>(vertices_.size()); }

  private:
    std::vector<int> vertices_;
};

struct InducedSubgraph {
    Graph graph;
    // New vertex id -> vertex id in the parent graph, ascending.
    std::vector<int> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Partition into connected components, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
std::vector<VertexSet> connected_components_within(const Graph& g, const VertexSet& s);

// Open neighborhood of a set: vertices outside s adjacent to some member.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

// True iff a is adjacent to every vertex of h. Requires a outside h.
bool is_apex(const Graph& g, int a, const VertexSet& h);

bool is_forest(const Graph& g);

// Edge-list text format: first line "n m", then m lines "u v" with u < v.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// DOT export; vertices carry a color attribute when a coloring is supplied.
std::string to_dot(const Graph& g, const Coloring* coloring = nullptr);

}  // namespace lincolor
