// Copyright 2026 The graphent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphent/graph.h"

#include "gtest/gtest.h"

#include "graphent/catalog.h"
#include "test_util.h"

using namespace graphent;
using namespace graphent::testing;

namespace {

Graph triangle() {
    return Graph(3, {{1, 2}, {1, 3}, {2, 3}});
}

Graph complete(int n) {
    std::vector<Edge> e;
    for (int a = 1; a <= n; a++) {
        for (int b = a + 1; b <= n; b++) {
            e.emplace_back(a, b);
        }
    }
    return Graph(n, e);
}

}  // namespace

TEST(graph, make_graph_normalizes) {
    Graph g = make_graph(3, {{2, 1}, {1, 3}, {1, 3}});
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {1, 3}}));
    EXPECT_EQ(g.num_edges(), 2u);
    EXPECT_EQ(make_graph(2, {{1, 2}}), catalog_get(1).graph);

    Graph single = make_graph(1, {});
    EXPECT_EQ(single.num_vertices(), 1);
    EXPECT_TRUE(single.edges().empty());
    EXPECT_EQ(single, Graph());
}

TEST(graph, make_graph_rejects_bad_input) {
    EXPECT_THROW(make_graph(3, {{1, 4}}), std::invalid_argument);
    EXPECT_THROW(make_graph(3, {{0, 1}}), std::invalid_argument);
    EXPECT_THROW(make_graph(3, {{2, 2}}), std::invalid_argument);
    EXPECT_THROW(make_graph(0, {}), std::invalid_argument);
    EXPECT_THROW(make_graph(17, {}), std::invalid_argument);
    EXPECT_NO_THROW(make_graph(16, {{1, 16}}));
}

TEST(graph, neighbors) {
    EXPECT_EQ(neighbors(catalog_get(2).graph, 1), (std::vector<int>{2, 3}));
    EXPECT_EQ(neighbors(catalog_get(4).graph, 2), (std::vector<int>{1, 3}));
    Graph empty(4, {});
    for (int a = 1; a <= 4; a++) {
        EXPECT_TRUE(neighbors(empty, a).empty());
    }
    EXPECT_THROW(neighbors(empty, 5), std::out_of_range);
    EXPECT_THROW(neighbors(empty, 0), std::out_of_range);
}

TEST(graph, local_complement_examples) {
    EXPECT_EQ(local_complement(triangle(), 1), Graph(3, {{1, 2}, {1, 3}}));
    // Star centered at 1: neighbors {2,3,4} are pairwise unconnected, so all three edges appear.
    EXPECT_EQ(local_complement(catalog_get(3).graph, 1), complete(4));
    // A leaf has one neighbor; nothing to toggle.
    EXPECT_EQ(local_complement(catalog_get(3).graph, 2), catalog_get(3).graph);
    EXPECT_THROW(local_complement(triangle(), 4), std::out_of_range);
}

TEST(graph, local_complement_matches_rule_and_is_involution) {
    auto &rng = shared_rng();
    for (int trial = 0; trial < 300; trial++) {
        int n = 1 + trial % 9;
        Graph g = random_graph(n, 0.45, rng);
        for (int a = 1; a <= n; a++) {
            Graph h = local_complement(g, a);
            ASSERT_EQ(h, local_complement_by_rule(g, a)) << g.str() << " at " << a;
            ASSERT_EQ(local_complement(h, a), g);
            ASSERT_EQ(h.num_vertices(), g.num_vertices());
            ASSERT_EQ(h.is_connected(), g.is_connected());
            ASSERT_EQ(neighbors(h, a), neighbors(g, a));
        }
    }
}

TEST(graph, connectivity) {
    EXPECT_TRUE(Graph().is_connected());
    EXPECT_FALSE(Graph(2, {}).is_connected());
    EXPECT_TRUE(catalog_get(45).graph.is_connected());
    EXPECT_FALSE(Graph(4, {{1, 2}, {3, 4}}).is_connected());
}

TEST(graph, vertex_permutation) {
    EXPECT_THROW(VertexPermutation({1, 1, 2}), std::invalid_argument);
    EXPECT_THROW(VertexPermutation({0, 1}), std::invalid_argument);
    VertexPermutation p({2, 3, 1});
    EXPECT_EQ(p.image(1), 2);
    EXPECT_EQ(p.inverse().image(2), 1);
    EXPECT_EQ(relabel(relabel(triangle(), p), p.inverse()), triangle());
}

TEST(graph, isomorphism_examples) {
    Graph g = catalog_get(19).graph;
    auto w = find_isomorphism(g, g);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(relabel(g, *w), g);
    EXPECT_EQ(*find_isomorphism(catalog_get(4).graph, catalog_get(4).graph), VertexPermutation::identity(4));

    Graph p123(3, {{1, 2}, {2, 3}});
    Graph p213(3, {{2, 1}, {1, 3}});
    EXPECT_TRUE(is_isomorphic(p123, p213));

    // Degree sequences (1,2,2,1) and (3,1,1,1) differ.
    EXPECT_FALSE(is_isomorphic(catalog_get(4).graph, catalog_get(3).graph));
    EXPECT_FALSE(is_isomorphic(Graph(3, {}), Graph(4, {})));
}

TEST(graph, isomorphism_witness_and_equivalence_relation) {
    auto &rng = shared_rng();
    for (int trial = 0; trial < 200; trial++) {
        int n = 2 + trial % 7;
        Graph g = random_graph(n, 0.5, rng);
        Graph h = relabel(g, random_permutation(n, rng));
        auto w = find_isomorphism(g, h);
        ASSERT_TRUE(w.has_value());
        ASSERT_EQ(relabel(g, *w), h);
        ASSERT_TRUE(is_isomorphic(h, g));
        Graph k = relabel(h, random_permutation(n, rng));
        ASSERT_TRUE(is_isomorphic(g, k));

        Graph other = random_graph(n, 0.5, rng);
        bool brute = min_edge_list_over_all_relabelings(g) == min_edge_list_over_all_relabelings(other);
        ASSERT_EQ(is_isomorphic(g, other), brute) << g.str() << " vs " << other.str();
        ASSERT_EQ(is_isomorphic(other, g), brute);
    }
}

TEST(graph, canonical_form) {
    Graph p213(3, {{2, 1}, {1, 3}});
    Graph p123(3, {{1, 2}, {2, 3}});
    EXPECT_EQ(canonical_form(p213), canonical_form(p123));
    EXPECT_TRUE(is_isomorphic(canonical_form(p213), p213));

    Graph g19 = catalog_get(19).graph;
    auto &rng = shared_rng();
    Graph a = relabel(g19, random_permutation(6, rng));
    Graph b = relabel(g19, random_permutation(6, rng));
    EXPECT_EQ(canonical_form(a), canonical_form(b));
    EXPECT_EQ(canonical_form(canonical_form(g19)), canonical_form(g19));
}

TEST(graph, canonical_form_agrees_with_isomorphism) {
    auto &rng = shared_rng();
    for (int trial = 0; trial < 300; trial++) {
        int n = 1 + trial % 8;
        Graph g = random_graph(n, 0.4, rng);
        Graph c = canonical_form(g);
        ASSERT_EQ(canonical_form(relabel(g, random_permutation(n, rng))), c);
        ASSERT_EQ(canonical_form(c), c);
        ASSERT_TRUE(is_isomorphic(c, g));
        Graph other = random_graph(n, 0.4, rng);
        ASSERT_EQ(canonical_form(other) == c, is_isomorphic(other, g));
    }
}

TEST(graph, lc_orbit_examples) {
    EXPECT_EQ(lc_orbit(catalog_get(1).graph).size(), 1u);

    LcOrbit star = lc_orbit(catalog_get(3).graph);
    EXPECT_TRUE(star.contains(complete(4)));
    EXPECT_TRUE(star.contains(catalog_get(3).graph));

    LcOrbit path = lc_orbit(catalog_get(4).graph);
    for (const auto &g : star.representatives) {
        EXPECT_FALSE(path.representatives.contains(g));
    }
}

TEST(graph, lc_orbit_closed_and_well_defined) {
    auto &rng = shared_rng();
    for (int trial = 0; trial < 20; trial++) {
        Graph g = random_graph(5, 0.5, rng);
        LcOrbit orbit = lc_orbit(g, kDefaultOrbitBudget, true);
        for (const auto &h : orbit.representatives) {
            ASSERT_EQ(canonical_form(h), h);
            for (int a = 1; a <= h.num_vertices(); a++) {
                ASSERT_TRUE(orbit.contains(local_complement(h, a)));
            }
        }
        // Starting anywhere in the orbit gives the same orbit.
        const Graph &other = *std::next(orbit.representatives.begin(), trial % orbit.size());
        ASSERT_EQ(lc_orbit(relabel(other, random_permutation(5, rng))).representatives, orbit.representatives);
        ASSERT_EQ(orbit.moves.size(), orbit.size() * 5);
    }
}

TEST(graph, lc_orbit_budget) {
    EXPECT_THROW(lc_orbit(catalog_get(45).graph, 2), BudgetExceeded);
    try {
        lc_orbit(catalog_get(30).graph, 3);
        FAIL() << "expected BudgetExceeded";
    } catch (const BudgetExceeded &e) {
        EXPECT_EQ(e.budget(), 3u);
        EXPECT_EQ(e.reached(), 4u);
    }
    EXPECT_NO_THROW(lc_orbit(catalog_get(1).graph, 1));
}

TEST(graph, lc_equivalence) {
    EXPECT_TRUE(are_lc_equivalent(catalog_get(3).graph, complete(4)));
    EXPECT_TRUE(are_lc_equivalent(complete(4), catalog_get(3).graph));
    EXPECT_FALSE(are_lc_equivalent(catalog_get(3).graph, catalog_get(4).graph));
    Graph g = catalog_get(27).graph;
    EXPECT_TRUE(are_lc_equivalent(g, g));
    EXPECT_TRUE(are_lc_equivalent(g, relabel(local_complement(g, 3), random_permutation(7))));
    EXPECT_FALSE(are_lc_equivalent(Graph(3, {{1, 2}}), catalog_get(2).graph));
}
