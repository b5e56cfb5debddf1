#pragma once

#include <map>
#include <optional>

#include "lincolor/coloring.hpp"
#include "lincolor/graph.hpp"

namespace lincolor {

// Connected vertex set in which no color occurs exactly once.
struct CenteredWitness {
    VertexSet subgraph;
};

// Path on which every color occurs at least twice.
struct NonCenteredPath {
    std::vector<int> path;
    std::map<int, int> multiplicities;
};

struct CenteredCheck {
    bool ok;
    std::optional<CenteredWitness> witness;
};

enum class VerifyStatus { Ok, Witness, BudgetExceeded };

struct LinearCheck {
    VerifyStatus status;
    std::optional<NonCenteredPath> witness;
    SearchStats stats;
    bool used_forest_route = false;

    bool ok() const { return status == VerifyStatus::Ok; }
};

// Centered-coloring check by iterated center removal; a component with no
// center is returned as the witness.
CenteredCheck verify_centered(const Graph& g, const Coloring& c);

// Linear-coloring check. Exhaustive over simple paths with (endpoint,
// visited-set) deduplication; forests take the unique-path-per-pair route.
// Returns the lexicographically least non-centered path when one exists.
LinearCheck verify_linear(const Graph& g, const Coloring& c, SearchBudget budget = {});

// True iff every color on the path appears at least twice on it.
bool check_certificate(const Path& p, const Coloring& c);

NonCenteredPath make_non_centered_path(const Graph& g, const Coloring& c,
                                       const std::vector<int>& vertices);

}  // namespace lincolor
