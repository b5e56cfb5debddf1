#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lincolor/generators.hpp"
#include "lincolor/interval.hpp"
#include "lincolor/oracle.hpp"
#include "lincolor/treedepth.hpp"
#include "lincolor/verify.hpp"
#include "support/oracles.hpp"

using namespace lincolor;

namespace {

IntervalRepresentation path_intervals(int n) {
    IntervalRepresentation rep;
    for (int v = 0; v < n; ++v) rep.intervals.emplace_back(v, v + 1);
    return rep;
}

bool has_hamiltonian_path(const Graph& g) {
    int n = g.vertex_count();
    if (n == 1) return true;
    std::vector<bool> used(n, false);
    std::function<bool(int, int)> extend = [&](int v, int len) {
        if (len == n) return true;
        used[v] = true;
        for (int u : g.neighbors(v))
            if (!used[u] && extend(u, len + 1)) {
                used[v] = false;
                return true;
            }
        used[v] = false;
        return false;
    };
    for (int s = 0; s < n; ++s)
        if (extend(s, 1)) return true;
    return false;
}

void check_ordering_invariants(const IntervalRepresentation& rep, const CliqueOrdering& ord) {
    int n = rep.vertex_count();
    auto g = intersection_graph(rep);
    // consecutiveness and maximality, plus the rebuilt intersection graph
    std::vector<std::pair<int, int>> rebuilt;
    for (int idx = 0; idx < static_cast<int>(ord.cliques.size()); ++idx) {
        auto members = ord.cliques[idx].to_vector();
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                CHECK(g.has_edge(members[a], members[b]));
                rebuilt.emplace_back(members[a], members[b]);
            }
        for (int v = 0; v < n; ++v)
            CHECK(ord.cliques[idx].contains(v) ==
                  (ord.introduce[v] <= idx && idx <= ord.forget[v]));
        // maximal: no outside vertex adjacent to the whole clique
        for (int v = 0; v < n; ++v) {
            if (ord.cliques[idx].contains(v)) continue;
            CHECK_FALSE(is_apex(g, v, ord.cliques[idx]));
        }
    }
    for (int idx = 1; idx < static_cast<int>(ord.cliques.size()); ++idx)
        CHECK_FALSE(ord.cliques[idx] == ord.cliques[idx - 1]);
    Graph back(n, std::move(rebuilt));
    CHECK(back.edges() == g.edges());
}

}  // namespace

TEST_CASE("clique_ordering on the worked examples") {
    SUBCASE("four staggered intervals") {
        IntervalRepresentation rep{{{0, 2}, {1, 4}, {3, 6}, {5, 7}}};
        auto ord = clique_ordering(rep);
        REQUIRE(ord.cliques.size() == 3);
        CHECK(ord.cliques[0].to_vector() == std::vector<int>{0, 1});
        CHECK(ord.cliques[1].to_vector() == std::vector<int>{1, 2});
        CHECK(ord.cliques[2].to_vector() == std::vector<int>{2, 3});
        CHECK(ord.forget == std::vector<int>{0, 1, 2, 2});
        CHECK(ord.introduce == std::vector<int>{0, 0, 1, 2});
    }
    SUBCASE("single interval") {
        auto ord = clique_ordering(IntervalRepresentation{{{0, 0}}});
        REQUIRE(ord.cliques.size() == 1);
        CHECK(ord.cliques[0].to_vector() == std::vector<int>{0});
    }
    SUBCASE("three mutually overlapping intervals") {
        auto ord = clique_ordering(IntervalRepresentation{{{0, 5}, {1, 6}, {2, 7}}});
        REQUIRE(ord.cliques.size() == 1);
        CHECK(ord.cliques[0].to_vector() == std::vector<int>{0, 1, 2});
    }
}

TEST_CASE("clique_ordering invariants on random instances") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        int n = 1 + static_cast<int>(seed % 40);
        if (seed == 1) n = 200;
        auto ri = random_interval(n, 3 * n, seed * 13);
        check_ordering_invariants(ri.rep, clique_ordering(ri.rep));
    }
}

TEST_CASE("prevailing on the worked examples") {
    SUBCASE("four staggered intervals") {
        IntervalRepresentation rep{{{0, 2}, {1, 4}, {3, 6}, {5, 7}}};
        auto g = intersection_graph(rep);
        auto ps = prevailing(g, clique_ordering(rep));
        CHECK(ps.path == std::vector<int>{1, 2});
        CHECK(ps.subgraph.to_vector() == std::vector<int>{1, 2, 3});
        REQUIRE(ps.gaps.size() == 1);
        CHECK(ps.gaps[0].component.to_vector() == std::vector<int>{0});
        CHECK(ps.gaps[0].apex_index == 0);
    }
    SUBCASE("single clique") {
        IntervalRepresentation rep{{{0, 5}, {1, 6}, {2, 7}}};
        auto g = intersection_graph(rep);
        auto ps = prevailing(g, clique_ordering(rep));
        CHECK(ps.path == std::vector<int>{0});
        CHECK(ps.subgraph.to_vector() == std::vector<int>{0, 1, 2});
        CHECK(ps.gaps.empty());
    }
    SUBCASE("path of five intervals") {
        auto rep = path_intervals(5);
        auto g = intersection_graph(rep);
        REQUIRE(g.edges() == Graph::path(5).edges());
        auto ps = prevailing(g, clique_ordering(rep));
        CHECK(ps.path == std::vector<int>{1, 2, 3});
        CHECK(ps.subgraph.to_vector() == std::vector<int>{1, 2, 3, 4});
        REQUIRE(ps.gaps.size() == 1);
        CHECK(ps.gaps[0].component.to_vector() == std::vector<int>{0});
        CHECK(ps.gaps[0].apex_index == 0);
    }
    SUBCASE("disconnected input is rejected") {
        IntervalRepresentation rep{{{0, 1}, {5, 6}}};
        CHECK_THROWS_AS(prevailing(intersection_graph(rep), clique_ordering(rep)),
                        PreconditionError);
    }
}

TEST_CASE("prevailing invariants on random connected instances") {
    int tested = 0;
    for (std::uint64_t seed = 1; tested < 80 && seed <= 600; ++seed) {
        int n = 2 + static_cast<int>(seed % 30);
        auto ri = random_interval(n, 2 * n, seed * 17);
        auto comps = connected_components(ri.graph);
        if (comps.size() != 1) continue;
        ++tested;
        auto ord = clique_ordering(ri.rep);
        auto ps = prevailing(ri.graph, ord);

        // forget indices strictly increase along the path
        for (std::size_t j = 0; j + 1 < ps.path.size(); ++j)
            CHECK(ord.forget[ps.path[j]] < ord.forget[ps.path[j + 1]]);
        // alternate forget cliques are disjoint, the path is induced
        for (std::size_t j = 0; j + 2 < ps.path.size(); ++j)
            CHECK_FALSE(ord.cliques[ord.forget[ps.path[j]]].intersects(
                ord.cliques[ord.forget[ps.path[j + 2]]]));
        for (std::size_t a = 0; a < ps.path.size(); ++a)
            for (std::size_t b = a + 1; b < ps.path.size(); ++b)
                CHECK(ri.graph.has_edge(ps.path[a], ps.path[b]) == (b == a + 1));

        // gap components are exactly the components of g minus Q,
        // each fully adjacent to its recorded path vertex
        auto outside = VertexSet::full(n) - ps.subgraph;
        auto expected = connected_components_within(ri.graph, outside);
        CHECK(expected.size() == ps.gaps.size());
        for (const auto& gap : ps.gaps) {
            bool found = false;
            for (auto& comp : expected) found = found || comp == gap.component;
            CHECK(found);
            CHECK(is_apex(ri.graph, ps.path[gap.apex_index], gap.component));
        }
    }
    CHECK(tested >= 80);
}

TEST_CASE("hamiltonian_path on the worked examples") {
    SUBCASE("four staggered intervals") {
        IntervalRepresentation rep{{{0, 2}, {1, 4}, {3, 6}, {5, 7}}};
        auto g = intersection_graph(rep);
        auto ord = clique_ordering(rep);
        auto ps = prevailing(g, ord);
        CHECK(hamiltonian_path(ps, g, ord).vertices() == std::vector<int>{1, 2, 3});
    }
    SUBCASE("single clique blocks ordered by forget then id") {
        IntervalRepresentation rep{{{0, 5}, {1, 6}, {2, 7}}};
        auto g = intersection_graph(rep);
        auto ord = clique_ordering(rep);
        auto ps = prevailing(g, ord);
        CHECK(hamiltonian_path(ps, g, ord).vertices() == std::vector<int>{0, 1, 2});
    }
    SUBCASE("single vertex") {
        IntervalRepresentation rep{{{0, 0}}};
        auto g = intersection_graph(rep);
        auto ord = clique_ordering(rep);
        auto ps = prevailing(g, ord);
        CHECK(hamiltonian_path(ps, g, ord).vertices() == std::vector<int>{0});
    }
}

TEST_CASE("hamiltonian_path spans the prevailing subgraph") {
    int tested = 0;
    for (std::uint64_t seed = 1; tested < 60 && seed <= 600; ++seed) {
        int n = 2 + static_cast<int>(seed % 25);
        auto ri = random_interval(n, 2 * n, seed * 37);
        if (connected_components(ri.graph).size() != 1) continue;
        ++tested;
        auto ord = clique_ordering(ri.rep);
        auto ps = prevailing(ri.graph, ord);
        auto path = hamiltonian_path(ps, ri.graph, ord);  // Path validates adjacency
        VertexSet covered(n);
        for (int v : path.vertices()) covered.insert(v);
        CHECK(covered == ps.subgraph);
    }
    CHECK(tested >= 60);
}

TEST_CASE("connected induced subgraphs of the prevailing subgraph have hamiltonian paths") {
    int tested = 0;
    for (std::uint64_t seed = 1; tested < 25 && seed <= 400; ++seed) {
        int n = 3 + static_cast<int>(seed % 7);
        auto ri = random_interval(n, 2 * n, seed * 59);
        if (connected_components(ri.graph).size() != 1) continue;
        ++tested;
        auto ord = clique_ordering(ri.rep);
        auto ps = prevailing(ri.graph, ord);
        auto q = induced_subgraph(ri.graph, ps.subgraph);
        int qn = q.graph.vertex_count();
        for (unsigned mask = 1; mask < (1u << qn); ++mask) {
            if (!testsupport::subset_connected(q.graph, mask)) continue;
            VertexSet sub(qn);
            for (int v = 0; v < qn; ++v)
                if ((mask >> v) & 1u) sub.insert(v);
            CHECK(has_hamiltonian_path(induced_subgraph(q.graph, sub).graph));
        }
    }
    CHECK(tested >= 25);
}

TEST_CASE("restriction of a linear coloring to the prevailing subgraph is centered") {
    int tested = 0;
    for (std::uint64_t seed = 1; tested < 30 && seed <= 600; ++seed) {
        int n = 3 + static_cast<int>(seed % 8);
        auto ri = random_interval(n, 2 * n, seed * 71);
        if (connected_components(ri.graph).size() != 1) continue;
        ++tested;
        auto lin = chi_lin_exact(ri.graph);
        auto ord = clique_ordering(ri.rep);
        auto ps = prevailing(ri.graph, ord);
        auto q = induced_subgraph(ri.graph, ps.subgraph);
        CHECK(verify_centered(q.graph, restrict_coloring(lin.witness, q.to_parent)).ok);
    }
    CHECK(tested >= 30);
}

TEST_CASE("centered_from_linear worked examples") {
    SUBCASE("path of four intervals") {
        auto rep = path_intervals(4);
        auto g = intersection_graph(rep);
        Coloring psi({1, 2, 3, 1});
        REQUIRE(verify_linear(g, psi).ok());
        auto res = centered_from_linear(g, rep, psi);
        CHECK_FALSE(check_valid(g, res.decomposition).has_value());
        CHECK(res.k == 3);
        CHECK(res.depth <= 9);
        CHECK(res.depth <= 3);
        CHECK(treedepth_exact(g).depth <= res.depth);
    }
    SUBCASE("single clique gives a chain") {
        IntervalRepresentation rep{{{0, 9}, {1, 9}, {2, 9}, {3, 9}}};
        auto g = intersection_graph(rep);
        auto res = centered_from_linear(g, rep, Coloring({1, 2, 3, 4}));
        CHECK(res.depth == 4);
        CHECK(res.depth <= 16);
        CHECK_FALSE(res.fallback_used);
    }
    SUBCASE("staggered intervals with the canonical coloring of an exact decomposition") {
        IntervalRepresentation rep{{{0, 2}, {1, 4}, {3, 6}, {5, 7}}};
        auto g = intersection_graph(rep);
        auto td = treedepth_exact(g);
        auto psi = canonical_coloring(g, td.decomposition);
        auto res = centered_from_linear(g, rep, psi);
        CHECK_FALSE(check_valid(g, res.decomposition).has_value());
        CHECK(res.depth <= res.k * res.k);
    }
    SUBCASE("violation detected en route is reported") {
        // the prevailing subgraph {1,2,3,4} is colored 2,1,2,1: no center
        auto rep = path_intervals(5);
        auto g = intersection_graph(rep);
        CHECK_THROWS_AS(centered_from_linear(g, rep, Coloring({1, 2, 1, 2, 1})), NotLinearError);
        try {
            centered_from_linear(g, rep, Coloring({1, 2, 1, 2, 1}));
        } catch (const NotLinearError& e) {
            CHECK(e.witness.subgraph.to_vector() == std::vector<int>{1, 2, 3, 4});
        }
    }
    SUBCASE("mismatched graph is rejected") {
        auto rep = path_intervals(4);
        CHECK_THROWS_AS(centered_from_linear(Graph::complete(4), rep, Coloring({1, 2, 3, 4})),
                        PreconditionError);
    }
}

TEST_CASE("interval pipeline on random instances") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        int n = 2 + static_cast<int>(seed % 35);
        auto ri = random_interval(n, 2 * n, seed * 101);
        auto psi = canonical_coloring(ri.graph, dfs_decomposition(ri.graph, 0));
        auto res = centered_from_linear(ri.graph, ri.rep, psi);
        CHECK_FALSE(check_valid(ri.graph, res.decomposition).has_value());
        CHECK(res.depth <= res.k * res.k);
        auto canonical = canonical_coloring(ri.graph, res.decomposition);
        CHECK(canonical.size() == res.depth);
        CHECK(verify_centered(ri.graph, canonical).ok);
    }
}

TEST_CASE("interval pipeline with oracle-minimum linear colorings") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        int n = 2 + static_cast<int>(seed % 9);
        auto ri = random_interval(n, 2 * n, seed * 211);
        auto lin = chi_lin_exact(ri.graph);
        auto res = centered_from_linear(ri.graph, ri.rep, lin.witness);
        CHECK_FALSE(check_valid(ri.graph, res.decomposition).has_value());
        CHECK(res.depth <= lin.chi * lin.chi);
    }
}

TEST_CASE("interval text round trip") {
    IntervalRepresentation rep{{{0, 2}, {1, 4}}};
    auto text = to_interval_text(rep);
    CHECK(text == "0 2\n1 4\n");
    auto back = parse_intervals(text);
    CHECK(back.intervals == rep.intervals);
    CHECK_THROWS_AS(parse_intervals("3 1\n"), ParseError);
}
