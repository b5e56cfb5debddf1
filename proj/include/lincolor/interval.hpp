#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lincolor/coloring.hpp"
#include "lincolor/graph.hpp"
#include "lincolor/treedepth.hpp"

namespace lincolor {

struct NotLinearError : Error {
    CenteredWitness witness;
    explicit NotLinearError(CenteredWitness w)
        : Error("coloring is not linear: a prevailing subgraph has no center"),
          witness(std::move(w)) {}
};

// Closed integer interval per vertex; the induced graph has an edge exactly
// when the intervals intersect.
struct IntervalRepresentation {
    std::vector<std::pair<long long, long long>> intervals;

    int vertex_count() const { return static_cast<int>(intervals.size()); }
    bool overlap(int u, int v) const;
};

Graph intersection_graph(const IntervalRepresentation& rep);
IntervalRepresentation restrict_intervals(const IntervalRepresentation& rep,
                                          const std::vector<int>& to_parent);

// One line per vertex: "l r".
IntervalRepresentation parse_intervals(std::istream& in);
IntervalRepresentation parse_intervals(const std::string& text);
std::string to_interval_text(const IntervalRepresentation& rep);

// Maximal cliques in consecutive order with introduce/forget indices:
// v is in clique i exactly when I(v) <= i <= F(v) (0-based).
struct CliqueOrdering {
    std::vector<VertexSet> cliques;
    std::vector<int> introduce;
    std::vector<int> forget;
};

CliqueOrdering clique_ordering(const IntervalRepresentation& rep);

struct GapComponent {
    VertexSet component;
    int apex_index;  // index into PrevailingStructure::path
};

struct PrevailingStructure {
    std::vector<int> path;
    VertexSet subgraph;
    std::vector<GapComponent> gaps;
};

// The prevailing path/subgraph loop: from the current clique take the vertex
// forgotten last (ties: smallest id), jump to its forget clique and absorb it.
// Requires a connected graph.
PrevailingStructure prevailing(const Graph& g, const CliqueOrdering& ord);

// Spanning path of the prevailing subgraph: after each path vertex v_j insert
// the vertices new to its forget clique, ordered by nondecreasing F then id.
Path hamiltonian_path(const PrevailingStructure& ps, const Graph& g, const CliqueOrdering& ord);

struct CenteredFromLinearResult {
    TreedepthDecomposition decomposition;
    int k;
    int depth;
    bool fallback_used;
};

// Treedepth decomposition from a linear coloring of an interval graph:
// decompose the prevailing subgraph canonically, recurse on gap components,
// and attach each below the deepest vertex of its neighborhood when that
// neighborhood is an ancestor chain; otherwise the component is rebuilt by a
// balanced clique-separator recursion and fallback_used is reported.
CenteredFromLinearResult centered_from_linear(const Graph& g, const IntervalRepresentation& rep,
                                              const Coloring& psi);

}  // namespace lincolor
