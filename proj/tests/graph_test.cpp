#include <doctest.h>

#include "graphhash/error.hpp"
#include "graphhash/generators.hpp"
#include "graphhash/graph.hpp"
#include "graphhash/isomorphism.hpp"
#include "test_graphs.hpp"

using namespace graphhash;
using namespace graphhash::testing;

TEST_CASE("parse empty graph") {
    const Graph g = parse_graph(R"({"vertices":[],"edges":[]})");
    CHECK(g.vertex_count() == 0);
    CHECK(g.edge_count() == 0);
    CHECK(serialize_graph(g) == R"({"vertices":[],"edges":[]})");
}

TEST_CASE("parse labeled directed edge") {
    const std::string text =
        R"({"vertices":[{"id":0,"label":1},{"id":1,"label":2}],"edges":[{"source":0,"target":1,"label":7,"directed":true}]})";
    const Graph g = parse_graph(text);
    REQUIRE(g.vertex_count() == 2);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.label(0) == Label{1});
    CHECK(g.label(1) == Label{2});
    CHECK(g.edge(0) == Edge{7, 0, 1, true});
    CHECK(serialize_graph(g) == text);
}

TEST_CASE("parse tolerates whitespace and vertex order, serialization normalizes") {
    const Graph g = parse_graph(R"( { "edges" : [ {"target":0, "source":1} ],
                                      "vertices" : [ {"id":1}, {"label":4, "id":0} ] } )");
    CHECK(serialize_graph(g) ==
          R"({"vertices":[{"id":0,"label":4},{"id":1}],"edges":[{"source":1,"target":0,"directed":false}]})");
}

TEST_CASE("absent labels are omitted, never null") {
    const Graph g(std::vector<Label>(2), {{std::nullopt, 0, 1, false}});
    const auto text = serialize_graph(g);
    CHECK(text.find("label") == std::string::npos);
    CHECK(text.find("null") == std::string::npos);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":0}],"edges":[{"source":0,"target":5}]})"), DanglingEndpoint);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":0},{"id":0}],"edges":[]})"), DuplicateVertexId);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":0},{"id":2}],"edges":[]})"), MalformedInput);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[],"edges":[])"), MalformedInput);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[]})"), MalformedInput);
    CHECK_THROWS_AS(parse_graph(R"([])"), MalformedInput);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":-1}],"edges":[]})"), MalformedInput);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":0,"label":4294967296}],"edges":[]})"), MalformedInput);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":0,"label":1.5}],"edges":[]})"), MalformedInput);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":0}],"edges":[{"source":0,"target":0,"directed":1}]})"),
                    MalformedInput);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":0,"color":3}],"edges":[]})"), MalformedInput);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":0}],"edges":[{"source":0}]})"), MalformedInput);
}

TEST_CASE("largest label round trips") {
    const auto text = R"({"vertices":[{"id":0,"label":4294967295}],"edges":[]})";
    CHECK(serialize_graph(parse_graph(text)) == text);
}

TEST_CASE("incidence lists self-loops once") {
    const Graph g(std::vector<Label>(2), {{std::nullopt, 0, 0, false}, {std::nullopt, 0, 1, true}, {std::nullopt, 0, 1, true}});
    CHECK(std::vector<std::size_t>(g.incident(0).begin(), g.incident(0).end()) == std::vector<std::size_t>{0, 1, 2});
    CHECK(std::vector<std::size_t>(g.incident(1).begin(), g.incident(1).end()) == std::vector<std::size_t>{1, 2});
    CHECK(g.degree(0) + g.degree(1) == 2 * g.edge_count() - 1);
}

TEST_CASE("edge endpoints are validated on construction") {
    CHECK_THROWS_AS(Graph(std::vector<Label>(1), {{std::nullopt, 0, 1, false}}), DanglingEndpoint);
}

TEST_CASE("round trip and incidence consistency on random graphs") {
    for (Seed s = 0; s < 100; ++s) {
        const Graph g = mixed_random(1 + s % 9, s % 17, s);
        const Graph back = parse_graph(serialize_graph(g));
        CHECK(back == g);

        std::size_t total = 0, loops = 0;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) total += g.degree(static_cast<VertexId>(v));
        for (const Edge& e : g.edges()) loops += e.is_self_loop();
        CHECK(total == 2 * g.edge_count() - loops);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            const auto expected = build_incidence(g.vertex_count(), g.edges())[v];
            CHECK(std::vector<std::size_t>(g.incident(static_cast<VertexId>(v)).begin(),
                                           g.incident(static_cast<VertexId>(v)).end()) == expected);
        }
    }
}

TEST_CASE("apply_permutation") {
    const Graph arc(std::vector<Label>{Label{5}, Label{6}}, {{9, 0, 1, true}});

    SUBCASE("identity") { CHECK(apply_permutation(arc, identity_permutation(2)) == arc); }

    SUBCASE("swap reverses the arc and moves labels") {
        const Graph swapped = apply_permutation(arc, Permutation{1, 0});
        CHECK(swapped.edge(0) == Edge{9, 1, 0, true});
        CHECK(swapped.label(0) == Label{6});
        CHECK(swapped.label(1) == Label{5});
    }

    SUBCASE("rejects non-bijections") {
        CHECK_THROWS_AS(apply_permutation(arc, Permutation{0, 0}), NotABijection);
        CHECK_THROWS_AS(apply_permutation(arc, Permutation{0}), NotABijection);
        CHECK_THROWS_AS(apply_permutation(arc, Permutation{0, 2}), NotABijection);
    }
}

TEST_CASE("permutation composition property") {
    for (Seed s = 0; s < 50; ++s) {
        const Graph g = mixed_random(1 + s % 8, s % 12, s);
        const auto p = random_permutation(g.vertex_count(), s * 3 + 1);
        const auto q = random_permutation(g.vertex_count(), s * 3 + 2);
        CHECK(apply_permutation(apply_permutation(g, p), q) == apply_permutation(g, compose(q, p)));
        CHECK(apply_permutation(apply_permutation(g, p), inverse(p)) == g);
    }
}

TEST_CASE("permuted graphs are isomorphic to the original") {
    for (Seed s = 0; s < 30; ++s) {
        const Graph g = mixed_random(1 + s % 7, s % 10, s);
        const auto p = random_permutation(g.vertex_count(), s);
        const auto res = oracle_isomorphic(g, apply_permutation(g, p), true);
        CHECK(res.isomorphic);
    }
}

TEST_CASE("disjoint_union") {
    const auto empty = disjoint_union(Graph{}, Graph{});
    CHECK(empty.graph.vertex_count() == 0);
    CHECK(empty.offset == 0);

    const auto k1k1 = disjoint_union(Graph::isolated(1), Graph::isolated(1));
    CHECK(k1k1.graph.vertex_count() == 2);
    CHECK(k1k1.graph.edge_count() == 0);
    CHECK(k1k1.offset == 1);

    const auto tt = disjoint_union(cycle(3), cycle(3));
    CHECK(tt.graph.vertex_count() == 6);
    CHECK(tt.graph.edge_count() == 6);
    CHECK(tt.offset == 3);
    for (const Edge& e : tt.graph.edges()) CHECK((e.source < 3) == (e.target < 3));
}
