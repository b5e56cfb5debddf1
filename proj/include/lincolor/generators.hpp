#pragma once

#include <map>
#include <string>
#include <vector>

#include "lincolor/coloring.hpp"
#include "lincolor/graph.hpp"
#include "lincolor/interval.hpp"

namespace lincolor {

// Generated graph with its explicit coloring and per-vertex role labels.
struct LabeledFamilyInstance {
    Graph graph;
    Coloring coloring;
    std::string family;
    std::map<std::string, long long> params;
    std::vector<std::string> roles;
};

// R_i: clique v_1..v_i plus one copy H_j of R_p (p = floor((i-1)/2)) pendant
// under each v_j; psi(v_j) = j and H_j reuses the recursive coloring shifted
// onto {1+(j+1) mod i, ..., 1+(j+p) mod i}. Copies are laid out depth-first in
// contiguous id blocks after the clique.
LabeledFamilyInstance gen_recursive_clique(int i);

// Complete binary tree with the given number of levels, BFS-indexed.
Graph gen_complete_binary_tree(int levels);

// Coloring pattern of B_a: b is the smallest integer with 2^a < 3^b; subsets
// C_1..C_{2^b} of [b] in nonincreasing size (ties by ascending bitmask);
// a prefix of subtrees over consecutive in-order leaf blocks is colored level
// by level, remaining vertices are local.
struct PsiPattern {
    int a;
    int b;
    int ell;
    int local_count;                // p
    std::vector<int> assignment;    // per vertex of B_a: 0 = local, else color in [b]
    std::vector<std::uint32_t> subsets;  // C_1..C_{2^b} as bitmasks
};

PsiPattern psi_pattern(int a);

// B_{ad} colored stripe by stripe with psi_pattern(a): stripe-disjoint global
// palettes (d*b colors) and parity-alternating local palettes (2p colors).
LabeledFamilyInstance striped_btree_coloring(int a, int d);

// Every edge replaced by a length-2 path; all subdivision vertices share one
// fresh color. Output is bipartite with degeneracy at most 2.
LabeledFamilyInstance subdivide_with_new_color(const Graph& g, const Coloring& c);

// Uniform random parent attachment.
Graph random_tree(int n, std::uint64_t seed);

struct RandomInterval {
    Graph graph;
    IntervalRepresentation rep;
};

RandomInterval random_interval(int n, long long span, std::uint64_t seed);

}  // namespace lincolor
