#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "graphhash/color_refinement.hpp"
#include "graphhash/generators.hpp"
#include "graphhash/isomorphism.hpp"
#include "test_graphs.hpp"

using namespace graphhash;
using namespace graphhash::testing;

namespace {

std::set<std::set<VertexId>> classes(const Coloring& c) {
    std::map<ColorId, std::set<VertexId>> by_color;
    for (std::size_t v = 0; v < c.color_of.size(); ++v) by_color[c.color_of[v]].insert(static_cast<VertexId>(v));
    std::set<std::set<VertexId>> out;
    for (auto& [_, members] : by_color) out.insert(members);
    return out;
}

}  // namespace

TEST_CASE("regular graphs keep one color") {
    CHECK(refine(cycle(6)).class_count() == 1);
    CHECK(refine(two_triangles()).class_count() == 1);
    CHECK(refine(complete(5)).class_count() == 1);
    for (Seed s = 0; s < 10; ++s) {
        const auto [a, b] = random_regular_pair(8, 3, s);
        CHECK(refine(a).class_count() == 1);
        CHECK(refine(b).class_count() == 1);
    }
}

TEST_CASE("path and star") {
    CHECK(classes(refine(path(3))) == std::set<std::set<VertexId>>{{0, 2}, {1}});
    CHECK(classes(refine(star(4))) == std::set<std::set<VertexId>>{{0}, {1, 2, 3, 4}});
}

TEST_CASE("longer path refines past degrees") {
    // P5: degrees split {0,4} from {1,2,3}; next round separates 2 from {1,3}.
    CHECK(classes(refine(path(5))) == std::set<std::set<VertexId>>{{0, 4}, {1, 3}, {2}});
}

TEST_CASE("color ids are canonical") {
    const Coloring c = refine(star(3));
    CHECK(c.color_of == std::vector<ColorId>{0, 1, 1, 1});
    const Coloring p = refine(path(4));
    CHECK(p.color_of == std::vector<ColorId>{0, 1, 1, 0});
}

TEST_CASE("empty and edgeless graphs") {
    CHECK(refine(Graph{}).class_count() == 0);
    CHECK(refine(Graph::isolated(4)).class_count() == 1);
}

TEST_CASE("parallel edges count with multiplicity, direction ignored") {
    const Graph doubled(std::vector<Label>(3), {{std::nullopt, 0, 1, true}, {std::nullopt, 1, 0, true}, {std::nullopt, 1, 2, false}});
    // Degrees 2, 3, 1.
    CHECK(refine(doubled).class_count() == 3);
    const Graph undirected(std::vector<Label>(3), {{std::nullopt, 0, 1, false}, {std::nullopt, 1, 2, true}});
    CHECK(classes(refine(undirected)) == std::set<std::set<VertexId>>{{0, 2}, {1}});
}

TEST_CASE("round one is the degree partition, rounds refine, fixpoint within |V| rounds") {
    for (Seed s = 0; s < 100; ++s) {
        const Graph g = mixed_random(1 + s % 12, s % 20, s);
        const auto history = refinement_history(g);
        REQUIRE(history.size() >= 2);
        const Coloring& round1 = history[1];
        for (std::size_t u = 0; u < g.vertex_count(); ++u) {
            for (std::size_t v = 0; v < g.vertex_count(); ++v) {
                CHECK((round1.color_of[u] == round1.color_of[v]) ==
                      (g.degree(static_cast<VertexId>(u)) == g.degree(static_cast<VertexId>(v))));
            }
        }
        for (std::size_t i = 1; i < history.size(); ++i) {
            CHECK(history[i].round == i);
            CHECK(refines(history[i], history[i - 1]));
            CHECK(history[i].class_count() >= history[i - 1].class_count());
        }
        CHECK(history.back().round <= std::max<std::size_t>(1, g.vertex_count()));
        CHECK(history.back().color_of == history[history.size() - 2].color_of);
    }
}

TEST_CASE("cr_compare") {
    CHECK(cr_compare(cycle(6), two_triangles()) == CrVerdict::inconclusive);
    CHECK(cr_compare(path(3), cycle(3)) == CrVerdict::non_isomorphic);
    CHECK(cr_compare(path(3), path(4)) == CrVerdict::non_isomorphic);
    for (Seed s = 0; s < 30; ++s) {
        const Graph g = mixed_random(1 + s % 9, s % 14, s);
        CHECK(cr_compare(g, apply_permutation(g, random_permutation(g.vertex_count(), s))) == CrVerdict::inconclusive);
    }
}

TEST_CASE("cr_compare is sound against the oracle on small graphs") {
    for (Seed s = 0; s < 300; ++s) {
        const std::size_t n = 1 + s % 5;
        const Graph g = mixed_random(n, s % 7, s);
        const Graph h = mixed_random(n, s % 7, s + 7777);
        if (cr_compare(g, h) == CrVerdict::non_isomorphic) {
            CHECK_FALSE(oracle_isomorphic(g, h, false).isomorphic);
        }
    }
}
