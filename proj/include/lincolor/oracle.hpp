#pragma once

#include "lincolor/coloring.hpp"
#include "lincolor/graph.hpp"

namespace lincolor {

struct ChiLinResult {
    int chi;
    Coloring witness;
    std::uint64_t nodes;
};

// Smallest k admitting a linear coloring, by exhaustive search over canonical
// colorings (the first occurrence of each color in vertex order introduces
// the next color id). Prefixes are pruned as soon as they contain a
// non-centered path, so any completed assignment is already verified.
ChiLinResult chi_lin_exact(const Graph& g, SearchBudget budget = {});

}  // namespace lincolor
