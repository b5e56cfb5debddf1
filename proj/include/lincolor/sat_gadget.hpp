#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lincolor/coloring.hpp"
#include "lincolor/graph.hpp"
#include "lincolor/verify.hpp"

namespace lincolor {

// CNF with signed literals (+v / -v, variables 1..n_vars). Clauses are kept
// as sorted duplicate-free literal sets; empty clauses can occur after ingest
// and are rejected only by the gadget construction.
struct CnfFormula {
    int n_vars = 0;
    std::vector<std::vector<int>> clauses;

    void validate() const;
    int clause_count() const { return static_cast<int>(clauses.size()); }
};

CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);
std::string to_dimacs(const CnfFormula& f);

struct ForcedAssignment {
    int variable;  // original 1-based index
    bool value;
    std::string reason;
};

// Enforces the gadget assumptions: duplicate literals collapsed, tautological
// clauses removed, single-polarity (or absent) variables assigned and their
// satisfied clauses removed, iterated to fixpoint. Variables are renumbered.
struct PreprocessResult {
    CnfFormula simplified;
    std::vector<int> var_to_original;  // simplified var (1-based) -> original var
    std::vector<ForcedAssignment> forced;
    std::vector<int> removed_clauses;  // original clause indices
    bool contains_empty_clause = false;

    // Satisfying assignment of the original formula from one of the
    // simplified formula (forced choices merged back).
    std::vector<bool> merge_assignment(const std::vector<bool>& simplified_assignment) const;
};

PreprocessResult preprocess(const CnfFormula& f);

enum class GadgetRole { U, UPrime, WPrime, WTrue, WFalse };

struct GadgetVertex {
    GadgetRole role;
    int i;  // variable index for U/UPrime/W*, 0-based position otherwise
    int j;  // clause index for WPrime/WTrue/WFalse, -1 otherwise
};

// The reduction graph and coloring. Internal palette {0..n+m} is shifted by
// color_offset (= 1) onto the shared Coloring format.
struct GadgetInstance {
    Graph graph;
    Coloring coloring;
    CnfFormula formula;
    int color_offset = 1;
    int n_vars = 0;
    int n_clauses = 0;
    std::vector<GadgetVertex> roles;
    std::vector<int> u;              // u_0..u_n
    std::vector<int> u_prime;        // u'_0..u'_n
    std::vector<int> w_prime;        // w'_1..w'_m
    std::vector<std::vector<int>> path_true;   // per variable, vertex ids in path order
    std::vector<std::vector<int>> path_false;
};

// Theorem-style construction; the formula must satisfy the preprocessed
// assumptions and have at least one variable and one clause.
GadgetInstance build_gadget(const CnfFormula& f);

// Certificate path for a satisfying assignment:
// P_0 . u_0 . P*_1 . u_1 . ... . P*_n . u_n . u'_0.
// Throws if the assignment leaves some clause color unique.
Path assignment_to_path(const GadgetInstance& gi, const std::vector<bool>& assignment);

// Reads which of the two variable paths the certificate uses. The path must
// be a valid certificate of the canonical u'_1..u'_0 shape.
std::vector<bool> path_to_assignment(const GadgetInstance& gi, const Path& p);

struct EquivalenceReport {
    bool truth_table_sat = false;
    bool path_found = false;
    bool inconclusive = false;  // path search abandoned on budget
    bool gadget_built = false;
    bool agree = false;
    std::optional<std::vector<bool>> assignment;  // over original variables
    SearchStats stats;
};

// Compares brute-force SAT with the non-centered-path search on the gadget of
// the preprocessed formula. Zero-clause and empty-clause cases short-circuit.
EquivalenceReport decide_equivalence(const CnfFormula& f, SearchBudget budget = {});

bool truth_table_sat(const CnfFormula& f, std::vector<bool>* model = nullptr);
bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment);

}  // namespace lincolor
