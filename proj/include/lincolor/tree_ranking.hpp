#pragma once

#include <cstdint>
#include <vector>

#include "lincolor/coloring.hpp"
#include "lincolor/graph.hpp"

namespace lincolor {

// Strictly increasing list of positive ranks.
class RankList {
  public:
    RankList() = default;
    explicit RankList(std::vector<int> ranks);

    const std::vector<int>& ranks() const { return ranks_; }
    bool empty() const { return ranks_.empty(); }
    int max() const { return ranks_.empty() ? 0 : ranks_.back(); }
    bool contains(int r) const;

  private:
    std::vector<int> ranks_;
};

// Rank of a vertex from its children's rank lists: x is the largest integer
// on at least two lists (0 when pairwise disjoint), the rank is the smallest
// integer above x absent from the union, and the returned list keeps the rank
// plus every union element above it.
std::pair<int, RankList> merge_rank_lists(const std::vector<RankList>& children);

struct MergeStep {
    int vertex;
    std::vector<RankList> child_lists;
    int x;
    int rank;
    RankList list;
};

struct SchafferResult {
    std::vector<int> rank;
    std::vector<RankList> list;
    int root;
    int size;
    std::vector<MergeStep> trace;
};

// Schaffer's optimal vertex ranking of a tree, built bottom-up from rank
// lists. Default root: the smallest-id leaf. Throws NotATreeError.
SchafferResult schaffer_rank(const Graph& tree, int root = -1, bool with_trace = false);

// zeta(L) = sum of 2^r over the list.
std::uint64_t zeta(const RankList& l);

// Per-vertex family of color subsets over the palette, as sorted bitmasks.
using ColorSetFamily = std::vector<std::vector<std::uint64_t>>;

// The S(v) recursion: leaves get {{psi(v)}}; an internal vertex applies
// xi(X) = X \ {psi(v)} when psi(v) is in X and the reduced set already occurs,
// otherwise X + {psi(v)}, over the union of the children's families, and adds
// {psi(v)}.
ColorSetFamily compatible_sets(const Graph& tree, int root, const Coloring& psi);

// rho(v) = sum over X in S(v) of (delta-1)^|X|. Requires delta >= 3.
std::vector<std::uint64_t> rho(const ColorSetFamily& family, int delta);

}  // namespace lincolor
