#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lincolor/generators.hpp"
#include "lincolor/graph.hpp"
#include "support/oracles.hpp"

using namespace lincolor;

TEST_CASE("construction normalizes and validates") {
    Graph g(4, {{3, 1}, {0, 1}, {1, 3}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 3}});
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), PreconditionError);
    auto nb = g.neighbors(1);
    CHECK(std::vector<int>(nb.begin(), nb.end()) == std::vector<int>{0, 3});
}

TEST_CASE("induced_subgraph") {
    SUBCASE("clique restriction") {
        auto ind = induced_subgraph(Graph::complete(3), VertexSet::of(3, {0, 1}));
        CHECK(ind.graph.vertex_count() == 2);
        CHECK(ind.graph.edge_count() == 1);
        CHECK(ind.to_parent == std::vector<int>{0, 1});
    }
    SUBCASE("path endpoints become isolated") {
        auto ind = induced_subgraph(Graph::path(4), VertexSet::of(4, {0, 2}));
        CHECK(ind.graph.vertex_count() == 2);
        CHECK(ind.graph.edge_count() == 0);
    }
    SUBCASE("identity case") {
        auto ind = induced_subgraph(Graph::path(4), VertexSet::full(4));
        CHECK(ind.graph.edges() == Graph::path(4).edges());
        CHECK(ind.to_parent == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("universe mismatch is an error") {
        CHECK_THROWS_AS(induced_subgraph(Graph::path(4), VertexSet::of(3, {0})),
                        PreconditionError);
    }
}

TEST_CASE("connected_components") {
    auto one = connected_components(Graph::path(4));
    REQUIRE(one.size() == 1);
    CHECK(one[0].size() == 4);

    auto two = connected_components(Graph(4, {{0, 1}, {2, 3}}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].to_vector() == std::vector<int>{0, 1});
    CHECK(two[1].to_vector() == std::vector<int>{2, 3});

    auto three = connected_components(Graph(3, {}));
    CHECK(three.size() == 3);
}

TEST_CASE("neighborhood") {
    auto star = Graph::star(4);
    CHECK(neighborhood(star, VertexSet::of(5, {0})).to_vector() ==
          std::vector<int>{1, 2, 3, 4});
    CHECK(neighborhood(Graph::path(4), VertexSet::of(4, {1, 2})).to_vector() ==
          std::vector<int>{0, 3});
    CHECK(neighborhood(Graph::complete(4), VertexSet::of(4, {0})).to_vector() ==
          std::vector<int>{1, 2, 3});
}

TEST_CASE("is_apex") {
    auto star = Graph::star(3);
    CHECK(is_apex(star, 0, VertexSet::of(4, {1, 2, 3})));
    CHECK_FALSE(is_apex(Graph::path(4), 0, VertexSet::of(4, {2, 3})));
    CHECK_THROWS_AS(is_apex(star, 1, VertexSet::of(4, {1, 2})), PreconditionError);

    auto r3 = gen_recursive_clique(3);
    // v_1 is vertex 0, its copy H_1 is vertex 3
    CHECK(is_apex(r3.graph, 0, VertexSet::of(r3.graph.vertex_count(), {3})));
}

TEST_CASE("components of induced subgraph agree with union-find on the restriction") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int n = 3 + static_cast<int>(seed % 10);
        auto g = testsupport::random_graph(n, seed * 31);
        Rng rng(seed);
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (rng.below(2)) s.insert(v);
        if (s.empty()) s.insert(0);

        auto ind = induced_subgraph(g, s);
        auto comps = connected_components(ind.graph);
        auto roots = testsupport::union_find_components(ind.graph.vertex_count(),
                                                        ind.graph.edges());
        std::set<std::vector<int>> from_lib, from_oracle;
        for (auto& c : comps) from_lib.insert(c.to_vector());
        std::map<int, std::vector<int>> grouped;
        for (int v = 0; v < ind.graph.vertex_count(); ++v) grouped[roots[v]].push_back(v);
        for (auto& [r, vs] : grouped) from_oracle.insert(vs);
        CHECK(from_lib == from_oracle);
    }
}

TEST_CASE("path type validates adjacency") {
    auto g = Graph::path(4);
    CHECK_NOTHROW(Path(g, {0, 1, 2, 3}));
    CHECK_NOTHROW(Path(g, {2}));
    CHECK_THROWS_AS(Path(g, {0, 2}), PreconditionError);
    CHECK_THROWS_AS(Path(g, {0, 1, 0}), PreconditionError);
    CHECK_THROWS_AS(Path(g, {}), PreconditionError);

    // fuzz: construction succeeds exactly when the list is a valid path
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Rng rng(seed);
        int n = 3 + rng.below_int(6);
        auto h = testsupport::random_graph(n, seed * 977);
        int len = 1 + rng.below_int(n);
        std::vector<int> vs;
        for (int i = 0; i < len; ++i) vs.push_back(rng.below_int(n));
        bool valid = true;
        std::set<int> seen;
        for (int v : vs)
            if (!seen.insert(v).second) valid = false;
        for (int i = 0; i + 1 < len && valid; ++i)
            if (!h.has_edge(vs[i], vs[i + 1])) valid = false;
        if (valid)
            CHECK_NOTHROW(Path(h, vs));
        else
            CHECK_THROWS_AS(Path(h, vs), PreconditionError);
    }
}

TEST_CASE("edge list round trip") {
    auto g = Graph(5, {{0, 1}, {1, 2}, {0, 4}});
    auto text = to_edge_list(g);
    CHECK(text == "5 3\n0 1\n0 4\n1 2\n");
    auto parsed = parse_edge_list(text);
    CHECK(parsed.edges() == g.edges());
    CHECK_THROWS_AS(parse_edge_list("3"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 2"), ParseError);
}

TEST_CASE("dot export carries colors") {
    auto g = Graph::path(3);
    Coloring c({1, 2, 1});
    auto dot = to_dot(g, &c);
    CHECK(dot.find("0 [color=1]") != std::string::npos);
    CHECK(dot.find("1 [color=2]") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    auto plain = to_dot(g);
    CHECK(plain.find("color") == std::string::npos);
}
