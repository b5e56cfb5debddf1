#include "lincolor/sat_gadget.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace lincolor {

namespace {

std::vector<int> normalize_clause(std::vector<int> clause, int n_vars) {
    for (int lit : clause) {
        if (lit == 0) throw PreconditionError("literal 0");
        if (std::abs(lit) > n_vars) throw PreconditionError("literal references undeclared variable");
    }
    std::sort(clause.begin(), clause.end(), [](int a, int b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
        return a > b;
    });
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    return clause;
}

bool is_tautology(const std::vector<int>& clause) {
    std::set<int> s(clause.begin(), clause.end());
    for (int lit : clause)
        if (s.count(-lit)) return true;
    return false;
}

}  // namespace

void CnfFormula::validate() const {
    if (n_vars < 0) throw PreconditionError("negative variable count");
    for (const auto& clause : clauses)
        for (int lit : clause) {
            if (lit == 0) throw PreconditionError("literal 0");
            if (std::abs(lit) > n_vars)
                throw PreconditionError("literal references undeclared variable");
        }
}

CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula f;
    bool header_seen = false;
    int declared_clauses = 0;
    std::string line;
    std::vector<int> current;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == '%') break;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, cnf;
            if (!(hs >> p >> cnf >> f.n_vars >> declared_clauses) || cnf != "cnf")
                throw ParseError("malformed DIMACS header");
            if (f.n_vars < 0 || declared_clauses < 0) throw ParseError("negative DIMACS counts");
            header_seen = true;
            continue;
        }
        if (!header_seen) throw ParseError("clause before DIMACS header");
        std::istringstream ls(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                f.clauses.push_back(normalize_clause(std::move(current), f.n_vars));
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
        if (ls.fail() && !ls.eof()) throw ParseError("malformed literal");
    }
    if (!header_seen) throw ParseError("missing DIMACS header");
    if (!current.empty()) throw ParseError("clause not terminated by 0");
    if (static_cast<int>(f.clauses.size()) != declared_clauses)
        throw ParseError("clause count does not match header");
    return f;
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.n_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

std::vector<bool> PreprocessResult::merge_assignment(
    const std::vector<bool>& simplified_assignment) const {
    int orig_vars = 0;
    for (const auto& fa : forced) orig_vars = std::max(orig_vars, fa.variable);
    for (int v : var_to_original) orig_vars = std::max(orig_vars, v);
    std::vector<bool> out(orig_vars, false);
    for (const auto& fa : forced) out[fa.variable - 1] = fa.value;
    for (std::size_t i = 0; i < var_to_original.size(); ++i)
        out[var_to_original[i] - 1] = i < simplified_assignment.size() && simplified_assignment[i];
    return out;
}

PreprocessResult preprocess(const CnfFormula& f) {
    f.validate();
    PreprocessResult res;
    std::vector<std::vector<int>> clauses;
    std::vector<int> orig_index;
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        auto c = normalize_clause(f.clauses[j], f.n_vars);
        if (is_tautology(c)) {
            res.removed_clauses.push_back(static_cast<int>(j));
            continue;
        }
        clauses.push_back(std::move(c));
        orig_index.push_back(static_cast<int>(j));
    }

    std::vector<bool> decided(f.n_vars + 1, false);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<char> pos(f.n_vars + 1, 0), neg(f.n_vars + 1, 0);
        for (const auto& c : clauses)
            for (int lit : c) (lit > 0 ? pos[lit] : neg[-lit]) = 1;
        for (int v = 1; v <= f.n_vars; ++v) {
            if (decided[v] || (pos[v] && neg[v])) continue;
            decided[v] = true;
            changed = true;
            bool value = pos[v];
            std::string reason = pos[v] ? "appears only positively"
                                        : (neg[v] ? "appears only negatively" : "unused");
            res.forced.push_back({v, value, reason});
            int satisfied_lit = value ? v : -v;
            std::vector<std::vector<int>> kept;
            std::vector<int> kept_index;
            for (std::size_t j = 0; j < clauses.size(); ++j) {
                bool satisfied = std::find(clauses[j].begin(), clauses[j].end(), satisfied_lit) !=
                                 clauses[j].end();
                if (satisfied)
                    res.removed_clauses.push_back(orig_index[j]);
                else {
                    kept.push_back(std::move(clauses[j]));
                    kept_index.push_back(orig_index[j]);
                }
            }
            clauses = std::move(kept);
            orig_index = std::move(kept_index);
        }
    }

    for (int v = 1; v <= f.n_vars; ++v)
        if (!decided[v]) res.var_to_original.push_back(v);
    std::vector<int> new_id(f.n_vars + 1, 0);
    for (std::size_t i = 0; i < res.var_to_original.size(); ++i)
        new_id[res.var_to_original[i]] = static_cast<int>(i) + 1;

    res.simplified.n_vars = static_cast<int>(res.var_to_original.size());
    for (auto& c : clauses) {
        std::vector<int> mapped;
        mapped.reserve(c.size());
        for (int lit : c) mapped.push_back(lit > 0 ? new_id[lit] : -new_id[-lit]);
        if (mapped.empty()) res.contains_empty_clause = true;
        res.simplified.clauses.push_back(normalize_clause(std::move(mapped), res.simplified.n_vars));
    }
    std::sort(res.removed_clauses.begin(), res.removed_clauses.end());
    return res;
}

GadgetInstance build_gadget(const CnfFormula& f) {
    f.validate();
    int n = f.n_vars, m = f.clause_count();
    if (n < 1 || m < 1) throw PreconditionError("gadget needs at least one variable and one clause");
    std::vector<char> pos(n + 1, 0), neg(n + 1, 0);
    for (const auto& clause : f.clauses) {
        if (clause.empty()) throw PreconditionError("empty clause; call preprocess first");
        if (is_tautology(clause)) throw PreconditionError("tautological clause; call preprocess first");
        auto norm = normalize_clause(clause, n);
        if (norm.size() != clause.size())
            throw PreconditionError("duplicate literal; call preprocess first");
        for (int lit : clause) (lit > 0 ? pos[lit] : neg[-lit]) = 1;
    }
    for (int v = 1; v <= n; ++v)
        if (!pos[v] || !neg[v])
            throw PreconditionError("variable " + std::to_string(v) +
                                    " lacks a polarity; call preprocess first");

    GadgetInstance gi;
    gi.formula = f;
    gi.n_vars = n;
    gi.n_clauses = m;
    // Layout: u_0..u_n, u'_0..u'_n, w'_1..w'_m, then the clause vertices of
    // P^T_1, P^F_1, ..., P^T_n, P^F_n in ascending clause order.
    gi.u.resize(n + 1);
    gi.u_prime.resize(n + 1);
    gi.w_prime.resize(m);
    for (int i = 0; i <= n; ++i) gi.u[i] = i;
    for (int i = 0; i <= n; ++i) gi.u_prime[i] = n + 1 + i;
    for (int j = 0; j < m; ++j) gi.w_prime[j] = 2 * n + 2 + j;
    int next = 2 * n + 2 + m;

    std::vector<int> internal_color;
    std::vector<GadgetVertex> roles;
    internal_color.resize(next);
    roles.resize(next);
    for (int i = 0; i <= n; ++i) {
        internal_color[gi.u[i]] = i;
        internal_color[gi.u_prime[i]] = i;
        roles[gi.u[i]] = {GadgetRole::U, i, -1};
        roles[gi.u_prime[i]] = {GadgetRole::UPrime, i, -1};
    }
    for (int j = 0; j < m; ++j) {
        internal_color[gi.w_prime[j]] = n + 1 + j;
        roles[gi.w_prime[j]] = {GadgetRole::WPrime, -1, j};
    }

    std::vector<std::pair<int, int>> edges;
    gi.path_true.assign(n + 1, {});
    gi.path_false.assign(n + 1, {});
    for (int i = 1; i <= n; ++i) {
        for (int sign = 0; sign < 2; ++sign) {
            auto& path = sign == 0 ? gi.path_true[i] : gi.path_false[i];
            int want = sign == 0 ? i : -i;
            for (int j = 0; j < m; ++j)
                if (std::find(f.clauses[j].begin(), f.clauses[j].end(), want) !=
                    f.clauses[j].end()) {
                    path.push_back(next);
                    internal_color.push_back(n + 1 + j);
                    roles.push_back({sign == 0 ? GadgetRole::WTrue : GadgetRole::WFalse, i, j});
                    ++next;
                }
            int prev = gi.u[i - 1];
            for (int w : path) {
                edges.emplace_back(prev, w);
                prev = w;
            }
            edges.emplace_back(prev, gi.u[i]);
        }
    }
    // P_0 = u'_1 ... u'_n w'_1 ... w'_m, attached to u_0; pendant u'_0 on u_n.
    std::vector<int> p0;
    for (int i = 1; i <= n; ++i) p0.push_back(gi.u_prime[i]);
    for (int j = 0; j < m; ++j) p0.push_back(gi.w_prime[j]);
    p0.push_back(gi.u[0]);
    for (std::size_t i = 0; i + 1 < p0.size(); ++i) edges.emplace_back(p0[i], p0[i + 1]);
    edges.emplace_back(gi.u[n], gi.u_prime[0]);

    gi.graph = Graph(next, std::move(edges));
    std::vector<int> shifted(internal_color.size());
    for (std::size_t v = 0; v < internal_color.size(); ++v)
        shifted[v] = internal_color[v] + gi.color_offset;
    gi.coloring = Coloring(std::move(shifted));
    gi.roles = std::move(roles);
    return gi;
}

Path assignment_to_path(const GadgetInstance& gi, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != gi.n_vars)
        throw PreconditionError("assignment size mismatch");
    std::vector<int> seq;
    for (int i = 1; i <= gi.n_vars; ++i) seq.push_back(gi.u_prime[i]);
    for (int j = 0; j < gi.n_clauses; ++j) seq.push_back(gi.w_prime[j]);
    seq.push_back(gi.u[0]);
    for (int i = 1; i <= gi.n_vars; ++i) {
        const auto& arm = assignment[i - 1] ? gi.path_true[i] : gi.path_false[i];
        seq.insert(seq.end(), arm.begin(), arm.end());
        seq.push_back(gi.u[i]);
    }
    seq.push_back(gi.u_prime[0]);
    Path q(gi.graph, std::move(seq));
    if (!check_certificate(q, gi.coloring)) {
        std::map<int, int> count;
        for (int v : q.vertices()) ++count[gi.coloring.color(v)];
        for (auto [color, k] : count)
            if (k < 2)
                throw PreconditionError(
                    "assignment does not satisfy the formula: clause color " +
                    std::to_string(color - gi.color_offset - gi.n_vars) + " appears once");
    }
    return q;
}

std::vector<bool> path_to_assignment(const GadgetInstance& gi, const Path& p) {
    if (!check_certificate(p, gi.coloring))
        throw PreconditionError("path is not a certificate: some color appears once");
    std::vector<char> on_path(gi.graph.vertex_count(), 0);
    for (int v : p.vertices()) on_path[v] = 1;
    int front = p.vertices().front(), back = p.vertices().back();
    int lo = std::min(front, back), hi = std::max(front, back);
    if (!((lo == gi.u_prime[1] && hi == gi.u_prime[0]) ||
          (lo == gi.u_prime[0] && hi == gi.u_prime[1])))
        throw PreconditionError("certificate is not a u'_1-u'_0 path");
    std::vector<bool> assignment(gi.n_vars, false);
    for (int i = 1; i <= gi.n_vars; ++i) {
        bool used_true = false, used_false = false;
        for (int w : gi.path_true[i]) used_true = used_true || on_path[w];
        for (int w : gi.path_false[i]) used_false = used_false || on_path[w];
        if (used_true == used_false)
            throw PreconditionError("certificate does not select exactly one side for variable " +
                                    std::to_string(i));
        const auto& arm = used_true ? gi.path_true[i] : gi.path_false[i];
        for (int w : arm)
            if (!on_path[w])
                throw PreconditionError("certificate uses a partial variable path for variable " +
                                        std::to_string(i));
        assignment[i - 1] = used_true;
    }
    if (!satisfies(gi.formula, assignment))
        throw Error("internal: certificate decoded to a non-satisfying assignment");
    return assignment;
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
    for (const auto& clause : f.clauses) {
        bool ok = false;
        for (int lit : clause) {
            int v = std::abs(lit);
            bool val = v <= static_cast<int>(assignment.size()) && assignment[v - 1];
            if ((lit > 0) == val) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

bool truth_table_sat(const CnfFormula& f, std::vector<bool>* model) {
    f.validate();
    if (f.n_vars > 24) throw PreconditionError("truth table limited to 24 variables");
    std::vector<bool> assignment(f.n_vars);
    for (std::uint64_t mask = 0; mask < (1ull << f.n_vars); ++mask) {
        for (int v = 0; v < f.n_vars; ++v) assignment[v] = (mask >> v) & 1;
        if (satisfies(f, assignment)) {
            if (model) *model = assignment;
            return true;
        }
    }
    return false;
}

EquivalenceReport decide_equivalence(const CnfFormula& f, SearchBudget budget) {
    EquivalenceReport rep;
    rep.truth_table_sat = truth_table_sat(f);
    PreprocessResult pre = preprocess(f);
    if (pre.contains_empty_clause) {
        rep.path_found = false;
        rep.agree = !rep.truth_table_sat;
        return rep;
    }
    if (pre.simplified.clauses.empty()) {
        rep.path_found = true;  // trivially satisfiable, no gadget needed
        auto assignment = pre.merge_assignment({});
        assignment.resize(f.n_vars, false);
        rep.assignment = assignment;
        rep.agree = rep.truth_table_sat && satisfies(f, assignment);
        return rep;
    }
    GadgetInstance gi = build_gadget(pre.simplified);
    rep.gadget_built = true;
    LinearCheck lin = verify_linear(gi.graph, gi.coloring, budget);
    rep.stats = lin.stats;
    if (lin.status == VerifyStatus::BudgetExceeded) {
        rep.inconclusive = true;
        return rep;
    }
    rep.path_found = lin.status == VerifyStatus::Witness;
    if (rep.path_found) {
        Path p(gi.graph, lin.witness->path);
        auto simplified_assignment = path_to_assignment(gi, p);
        auto assignment = pre.merge_assignment(simplified_assignment);
        assignment.resize(f.n_vars, false);
        if (!satisfies(f, assignment))
            throw Error("internal: merged assignment does not satisfy the original formula");
        rep.assignment = assignment;
    }
    rep.agree = rep.truth_table_sat == rep.path_found;
    return rep;
}

}  // namespace lincolor
