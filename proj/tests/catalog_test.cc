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

#include "graphent/catalog.h"

#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "graphent/state_vector.h"
#include "json.hpp"
#include "test_util.h"

using namespace graphent;
using namespace graphent::testing;

TEST(catalog, get) {
    EXPECT_EQ(catalog_get(4).graph.edges(), (std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}}));
    const Graph &g19 = catalog_get(19).graph;
    EXPECT_EQ(g19.num_edges(), 9u);
    EXPECT_TRUE(g19.has_edge(2, 5));
    EXPECT_EQ(catalog_get(45).graph.num_edges(), 10u);
    EXPECT_THROW(catalog_get(0), std::out_of_range);
    EXPECT_THROW(catalog_get(46), std::out_of_range);
    for (int id = 1; id <= kCatalogSize; id++) {
        EXPECT_EQ(catalog_get(id).id, id);
        EXPECT_EQ(catalog_get(id).n, catalog_get(id).graph.num_vertices());
    }
}

TEST(catalog, vertex_count_buckets) {
    std::vector<size_t> expected{1, 1, 2, 4, 11, 26};
    for (int n = 2; n <= 7; n++) {
        EXPECT_EQ(catalog_ids_with_n(n).size(), expected[n - 2]) << "n=" << n;
    }
    EXPECT_TRUE(catalog_ids_with_n(8).empty());
}

TEST(catalog, integrity) {
    const auto &all = catalog_all();
    ASSERT_EQ(all.size(), (size_t)kCatalogSize);
    for (const auto &e : all) {
        EXPECT_TRUE(e.graph.is_connected()) << e.id;
    }
    for (size_t i = 0; i < all.size(); i++) {
        for (size_t j = i + 1; j < all.size(); j++) {
            EXPECT_FALSE(is_isomorphic(all[i].graph, all[j].graph)) << all[i].id << " " << all[j].id;
        }
    }
}

TEST(catalog, lc_classes_pairwise_distinct) {
    const auto &all = catalog_all();
    std::vector<LcOrbit> orbits;
    for (const auto &e : all) {
        orbits.push_back(lc_orbit(e.graph));
    }
    for (size_t i = 0; i < all.size(); i++) {
        for (size_t j = i + 1; j < all.size(); j++) {
            if (all[i].n != all[j].n) {
                continue;
            }
            EXPECT_FALSE(orbits[i].contains(canonical_form(all[j].graph))) << all[i].id << " " << all[j].id;
        }
    }
}

TEST(catalog, entry_43_published_row) {
    const CatalogEntry &e = catalog_get(43);
    ASSERT_TRUE(e.printed_edges.has_value());
    Graph printed(7, *e.printed_edges);
    EXPECT_TRUE(are_lc_equivalent(printed, catalog_get(38).graph));
    EXPECT_FALSE(are_lc_equivalent(e.graph, catalog_get(38).graph));
    EXPECT_EQ(e.graph.num_edges(), printed.num_edges() + 1);
    EXPECT_TRUE(e.graph.has_edge(1, 7));
    for (const auto &other : catalog_all()) {
        if (other.id != 43) {
            EXPECT_FALSE(other.printed_edges.has_value());
        }
    }
}

TEST(catalog, reference_values_attached) {
    for (const auto &e : catalog_all()) {
        ASSERT_TRUE(e.expected_gcm.has_value());
        ASSERT_TRUE(e.expected_gem.has_value());
    }
    EXPECT_DOUBLE_EQ(*catalog_get(2).expected_gcm, 1.22474);
    EXPECT_DOUBLE_EQ(*catalog_get(8).expected_gem, 0.86855);
}

TEST(catalog, parse_edge_list) {
    EXPECT_EQ(parse_edge_list("1 2\n1 3\n"), catalog_get(2).graph);
    Graph g = parse_edge_list("# comment\nn 5\n1 2\n");
    EXPECT_EQ(g.num_vertices(), 5);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}}));
    EXPECT_EQ(parse_edge_list("\n  \n2   3\r\n1\t2\n"), Graph(3, {{1, 2}, {2, 3}}));

    try {
        parse_edge_list("1 1\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 1);
        EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
    }
    try {
        parse_edge_list("1 2\n2 x\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2);
    }
    EXPECT_THROW(parse_edge_list("1 2 3\n"), ParseError);
    EXPECT_THROW(parse_edge_list("0 2\n"), ParseError);
    EXPECT_THROW(parse_edge_list("-1 2\n"), ParseError);
    EXPECT_THROW(parse_edge_list("n 3\n1 4\n"), ParseError);
    EXPECT_THROW(parse_edge_list("n 3\nn 4\n"), ParseError);
    EXPECT_THROW(parse_edge_list("1 17\n"), ParseError);
    EXPECT_THROW(parse_edge_list(""), ParseError);
    EXPECT_THROW(parse_edge_list("# nothing\n"), ParseError);
    EXPECT_EQ(parse_edge_list("n 1\n"), make_graph(1, {}));
}

TEST(catalog, serialize_round_trip) {
    for (const auto &e : catalog_all()) {
        ASSERT_EQ(parse_edge_list(serialize_edge_list(e.graph)), e.graph);
    }
    Graph isolated(5, {{1, 2}});
    EXPECT_EQ(parse_edge_list(serialize_edge_list(isolated)), isolated);
    EXPECT_EQ(serialize_edge_list(catalog_get(1).graph), "n 2\n1 2\n");
    auto &rng = shared_rng();
    for (int trial = 0; trial < 50; trial++) {
        Graph r = random_graph(1 + trial % 12, 0.3, rng);
        ASSERT_EQ(parse_edge_list(serialize_edge_list(r)), r);
    }
}

TEST(catalog, export) {
    auto dir = std::filesystem::path(::testing::TempDir()) / "graphent_catalog_export";
    std::filesystem::remove_all(dir);
    export_catalog(dir);
    for (const auto &e : catalog_all()) {
        char name[16];
        std::snprintf(name, sizeof(name), "g%02d.edges", e.id);
        std::ifstream in(dir / name);
        ASSERT_TRUE(in.good()) << name;
        std::stringstream ss;
        ss << in.rdbuf();
        ASSERT_EQ(parse_edge_list(ss.str()), e.graph);
    }
    std::ifstream in(dir / "index.json");
    auto index = nlohmann::json::parse(in);
    ASSERT_EQ(index.size(), (size_t)kCatalogSize);
    EXPECT_EQ(index[42]["id"], 43);
    EXPECT_EQ(index[42]["file"], "g43.edges");
    EXPECT_TRUE(index[42].contains("printed_edges"));
    EXPECT_EQ(index[0]["n"], 2);
    EXPECT_EQ(index[0]["edge_count"], 1);
    std::filesystem::remove_all(dir);
}
