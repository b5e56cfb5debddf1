#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lincolor/coloring.hpp"
#include "lincolor/graph.hpp"
#include "lincolor/verify.hpp"

namespace lincolor {

struct NotCenteredError : Error {
    CenteredWitness witness;
    explicit NotCenteredError(CenteredWitness w)
        : Error("coloring is not centered"), witness(std::move(w)) {}
};

struct InvalidDecompositionError : Error {
    std::pair<int, int> violating_edge;
    explicit InvalidDecompositionError(std::pair<int, int> e)
        : Error("decomposition violates edge (" + std::to_string(e.first) + "," +
                std::to_string(e.second) + ")"),
          violating_edge(e) {}
};

// Rooted forest over the vertex set, parent links with -1 for roots. Depth is
// the maximum root-to-leaf vertex count; validity against a graph is checked
// by check_valid, not assumed.
class TreedepthDecomposition {
  public:
    TreedepthDecomposition() = default;
    explicit TreedepthDecomposition(std::vector<int> parent);

    int vertex_count() const { return static_cast<int>(parent_.size()); }
    int parent(int v) const { return parent_[v]; }
    const std::vector<int>& parents() const { return parent_; }
    std::vector<int> roots() const;
    int depth() const;

    // Vertex count on the root-to-v path.
    int depth_of(int v) const;
    bool is_ancestor(int a, int v) const;

  private:
    std::vector<int> parent_;
    std::vector<int> depth_of_;
    int depth_ = 0;
};

// ok -> nullopt, otherwise some graph edge whose endpoints are unrelated.
std::optional<std::pair<int, int>> check_valid(const Graph& g, const TreedepthDecomposition& t);

// Color = level counted from the bottom of each tree (leafmost level 1, root
// level = tree depth). Throws InvalidDecompositionError when t is not valid.
Coloring canonical_coloring(const Graph& g, const TreedepthDecomposition& t);

// Iterated center removal, centers become roots. Ties among centers: smallest
// color first, then smallest vertex id. Throws NotCenteredError.
TreedepthDecomposition canonical_decomposition(const Graph& g, const Coloring& c);

struct TdResult {
    int depth;
    TreedepthDecomposition decomposition;
    std::uint64_t nodes;
};

// Exact treedepth: iterative-deepening branch over root choices per component
// with memoization on induced vertex sets.
TdResult treedepth_exact(const Graph& g, SearchBudget budget = {});

struct ChiCenResult {
    int chi;
    Coloring witness;
    TreedepthDecomposition decomposition;
};

// Equals treedepth_exact; witness is the canonical coloring of an optimal
// decomposition.
ChiCenResult chi_cen_exact(const Graph& g, SearchBudget budget = {});

// DFS tree per component (the component holding start is rooted there, the
// rest at their smallest vertex; neighbors explored ascending).
TreedepthDecomposition dfs_decomposition(const Graph& g, int start = 0);

// Lemma-style restructuring: every vertex of s becomes an ancestor of every
// vertex of comp, depth does not grow, and ancestor relations among pairs on
// the same side of comp are preserved. Preconditions are checked and named.
TreedepthDecomposition apex_restructure(const Graph& g, const TreedepthDecomposition& t,
                                        const VertexSet& s, const VertexSet& comp);

}  // namespace lincolor
