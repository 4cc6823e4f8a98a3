#include <gtest/gtest.h>

#include <random>

#include "luf/compose.hpp"
#include "luf/generate.hpp"
#include "luf/io.hpp"
#include "luf/named.hpp"
#include "luf/recognizer.hpp"

using namespace luf;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

void expect_tree_invariants(const DecompTree& t) {
    EXPECT_TRUE(t.leaf_bound_holds());
    EXPECT_EQ(t.stats.sum_violations, 0u);
    EXPECT_LE(t.stats.nodes, 2 * t.stats.potential + t.stats.universal_nodes + 1);
}

}  // namespace

TEST(Recognizer, IsBasic) {
    EXPECT_EQ(is_basic(clique_graph(5)), BasicKind::chordal);
    EXPECT_EQ(is_basic(petersen_graph()), BasicKind::unichord_free);
    EXPECT_FALSE(is_basic(house_graph()));
    EXPECT_THROW(is_basic(Graph::from_edges(2, {})), PreconditionError);
}

TEST(Recognizer, HouseWitness) {
    auto v = recognize(house_graph());
    EXPECT_FALSE(v.long_unichord_free);
    ASSERT_TRUE(v.witness);
    EXPECT_FALSE(witness_violation(house_graph(), *v.witness, 5));
    EXPECT_EQ(std::minmax(v.witness->chord.first, v.witness->chord.second), std::minmax(0, 1));
}

TEST(Recognizer, BaseGraphsAreInClass) {
    EXPECT_TRUE(recognize(petersen_graph()).long_unichord_free);
    EXPECT_TRUE(recognize(heawood_graph()).long_unichord_free);
    auto t = build_tree(clique_graph(4));
    EXPECT_EQ(t.nodes.size(), 1u);
    EXPECT_EQ(t.nodes[0].leaf_class, LeafClass::chordal);
}

TEST(Recognizer, CutvertexWithHouseLeaf) {
    // House on 0..4 with a C5 hanging at vertex 2.
    Graph g = compose({CompositionKind::cutvertex_glue}, house_graph(),
                      Graph::from_edges({2, 10, 11, 12, 13}, {{2, 10}, {10, 11}, {11, 12}, {12, 13}, {13, 2}}))
                  .graph;
    auto t = build_tree(g);
    EXPECT_EQ(t.nodes[0].rule, NodeRule::cutvertex);
    EXPECT_EQ(t.stats.non_basic_leaves, 1u);
    auto v = recognize(g);
    EXPECT_FALSE(v.long_unichord_free);
    ASSERT_TRUE(v.witness);
    EXPECT_FALSE(witness_violation(g, *v.witness, 5));
}

TEST(Recognizer, OneJoinOfPetersenBlocksIsBasic) {
    // Two Petersen copies joined at markers 0 and 100: triangle-free and
    // still unichord-free, so the root is a leaf.
    Graph p = petersen_graph();
    std::vector<VertexId> ids;
    for (VertexId v : p.ids()) ids.push_back(v + 100);
    auto c = compose({CompositionKind::one_join, 0, 100}, p, relabel(p, ids));
    auto t = build_tree(c.graph);
    EXPECT_EQ(t.nodes.size(), 1u);
    EXPECT_EQ(t.nodes[0].leaf_class, LeafClass::unichord_free);
}

TEST(Recognizer, AmalgamWithPetersenBlock) {
    // K4 minus its marker is a triangle complete to N(100) in Petersen, which
    // creates diamonds; every leaf is basic.
    Graph p = petersen_graph();
    std::vector<VertexId> ids;
    for (VertexId v : p.ids()) ids.push_back(v + 100);
    Graph k4 = Graph::from_edges({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto c = compose({CompositionKind::one_join, 0, 100}, k4, relabel(p, ids));
    auto t = build_tree(c.graph);
    EXPECT_EQ(t.nodes[0].rule, NodeRule::amalgam);
    EXPECT_TRUE(t.all_leaves_basic());
    EXPECT_GE(t.stats.unichord_free_leaves, 1u);
    expect_tree_invariants(t);
}

TEST(Recognizer, UniversalRemovalMayDisconnect) {
    // A house plus a disjoint C5, with a universal vertex on top.
    Graph g = compose({CompositionKind::disjoint_union}, house_graph(),
                      Graph::from_edges({10, 11, 12, 13, 14}, {{10, 11}, {11, 12}, {12, 13}, {13, 14}, {14, 10}}))
                  .graph;
    g = compose({CompositionKind::add_universal}, g).graph;
    auto v = recognize(g);
    EXPECT_FALSE(v.long_unichord_free);
    ASSERT_TRUE(v.witness);
    EXPECT_FALSE(witness_violation(g, *v.witness, 5));
}

TEST(Recognizer, AgreesWithOracleOnRandomGraphs) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 2000; ++t) {
        int n = 3 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng);
        auto v = recognize(g);
        bool oracle = !find_long_unichord(g);
        ASSERT_EQ(v.long_unichord_free, oracle) << emit_json(g);
        if (!oracle) {
            ASSERT_TRUE(v.witness) << emit_json(g);
            EXPECT_FALSE(witness_violation(g, *v.witness, 5));
        }
        for (const auto& tree : v.trees) expect_tree_invariants(tree);
    }
}

TEST(Recognizer, GeneratedGraphsAreInClass) {
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_in_class_graph(20 + t * 5, rng);
        auto v = recognize(g);
        EXPECT_TRUE(v.long_unichord_free) << emit_json(g);
        for (const auto& tree : v.trees) expect_tree_invariants(tree);
    }
}

TEST(Recognizer, JsonAndDot) {
    auto v = recognize(house_graph());
    auto j = to_json(v);
    EXPECT_EQ(j["verdict"], "not-long-unichord-free");
    EXPECT_EQ(j["leaf_classes"]["non_basic"], 1);
    EXPECT_TRUE(j.contains("witness"));
    EXPECT_NE(to_dot(v.trees).find("non-basic"), std::string::npos);
    EXPECT_EQ(to_json(v.trees[0])["nodes"].size(), 1u);
}
