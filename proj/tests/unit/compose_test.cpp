#include <gtest/gtest.h>

#include "luf/compose.hpp"
#include "luf/generate.hpp"
#include "luf/io.hpp"
#include "luf/oracle.hpp"

using namespace luf;

namespace {

Graph triangle(VertexId a, VertexId b, VertexId c) { return Graph::from_edges({a, b, c}, {{a, b}, {b, c}, {a, c}}); }

Graph star(VertexId center, std::vector<VertexId> leaves) {
    std::vector<Edge> e;
    for (VertexId l : leaves) e.emplace_back(center, l);
    leaves.push_back(center);
    return Graph::from_edges(leaves, e);
}

// g and h are equal after renaming vertex `from` of h to `to`.
bool equal_after_rename(const Graph& g, const Graph& h, VertexId from, VertexId to) {
    std::vector<VertexId> ids;
    for (VertexId v : h.ids()) ids.push_back(v == from ? to : v);
    return relabel(h, ids) == g;
}

}  // namespace

TEST(Compose, CutvertexGlueMakesBowtie) {
    auto c = compose({CompositionKind::cutvertex_glue}, triangle(0, 1, 2), triangle(2, 3, 4));
    EXPECT_EQ(c.graph.order(), 5);
    EXPECT_EQ(c.graph.edge_count(), 6u);
    ASSERT_TRUE(c.split);
    EXPECT_TRUE(is_valid_split(c.graph, *c.split));
    EXPECT_THROW(compose({CompositionKind::cutvertex_glue}, triangle(0, 1, 2), triangle(5, 3, 4)), PreconditionError);
}

TEST(Compose, OneJoinOfStars) {
    auto c = compose({CompositionKind::one_join, 0, 10}, star(0, {1, 2, 3}), star(10, {11, 12}));
    EXPECT_EQ(c.graph.order(), 5);
    for (VertexId a : {1, 2, 3})
        for (VertexId b : {11, 12}) EXPECT_TRUE(c.graph.adjacent_ids(a, b));
    ASSERT_TRUE(c.split);
    EXPECT_TRUE(c.split->k.empty());
    EXPECT_TRUE(is_valid_split(c.graph, *c.split)) << *split_violation(c.graph, *c.split);
}

TEST(Compose, AddUniversalToC4IsW4) {
    auto c = compose({CompositionKind::add_universal}, cycle_graph(4));
    EXPECT_EQ(c.graph.order(), 5);
    EXPECT_EQ(c.graph.edge_count(), 8u);
    EXPECT_EQ(find_universal_vertices(c.graph), (VertexSet{4}));
}

TEST(Compose, AmalgamPreconditionsAreChecked) {
    // G1: marker 9 adjacent to K={0} and A1={1}; G2 shares K={0}.
    Graph g1 = Graph::from_edges({0, 1, 2, 9}, {{0, 1}, {1, 2}, {9, 0}, {9, 1}});
    Graph g2 = Graph::from_edges({0, 5, 6, 8}, {{0, 5}, {5, 6}, {8, 0}, {8, 5}});
    auto c = compose({CompositionKind::amalgam, 9, 8}, g1, g2);
    ASSERT_TRUE(c.split);
    EXPECT_TRUE(is_valid_split(c.graph, *c.split)) << *split_violation(c.graph, *c.split);
    EXPECT_EQ(c.split->k, (VertexSet{0}));
    // Marker neighborhood missing K.
    Graph bad = Graph::from_edges({0, 1, 2, 9}, {{0, 1}, {1, 2}, {9, 1}});
    EXPECT_THROW(compose({CompositionKind::amalgam, 9, 8}, bad, g2), PreconditionError);
    // A1 not K-complete.
    Graph bad2 = Graph::from_edges({0, 1, 2, 9}, {{1, 2}, {9, 0}, {9, 1}, {0, 2}});
    EXPECT_THROW(compose({CompositionKind::amalgam, 9, 8}, bad2, g2), PreconditionError);
}

TEST(Compose, AmalgamBlocksRoundTrip) {
    Graph g1 = Graph::from_edges({0, 1, 2, 3, 9}, {{0, 1}, {1, 2}, {2, 3}, {9, 0}, {9, 1}, {0, 3}});
    Graph g2 = Graph::from_edges({0, 5, 6, 7, 8}, {{0, 5}, {5, 6}, {6, 7}, {8, 0}, {8, 5}, {0, 7}});
    auto c = compose({CompositionKind::amalgam, 9, 8}, g1, g2);
    auto b = blocks(c.graph, *c.split);
    EXPECT_TRUE(equal_after_rename(g1, b.g1, b.marker_in_g1, 9));
    EXPECT_TRUE(equal_after_rename(g2, *b.g2, b.marker_in_g2, 8));
    auto found = find_amalgam(c.graph);
    ASSERT_TRUE(found);
    EXPECT_TRUE(is_valid_split(c.graph, *found));
}

TEST(Compose, Proper2Cutset) {
    // Two 5-cycles through a=0, b=2 with markers 1 and 11.
    Graph g1 = Graph::from_edges({0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Graph g2 = Graph::from_edges({0, 11, 2, 13, 14}, {{0, 11}, {11, 2}, {2, 13}, {13, 14}, {14, 0}});
    auto c = compose({CompositionKind::proper_2cutset, 1, 11}, g1, g2);
    EXPECT_EQ(c.graph.order(), 6);
    EXPECT_EQ(c.graph.edge_count(), 6u);
    ASSERT_TRUE(c.split);
    EXPECT_TRUE(is_valid_split(c.graph, *c.split)) << *split_violation(c.graph, *c.split);
    auto b = blocks(c.graph, *c.split);
    EXPECT_TRUE(equal_after_rename(g1, b.g1, b.marker_in_g1, 1));
    EXPECT_THROW(compose({CompositionKind::proper_2cutset, 3, 11}, g1, g2), PreconditionError);
}

TEST(Compose, Substitution) {
    auto c = compose({CompositionKind::substitution, 0}, path_graph(3), Graph::from_edges({5, 6}, {}));
    EXPECT_EQ(c.graph.order(), 4);
    EXPECT_TRUE(c.graph.adjacent_ids(5, 1));
    EXPECT_TRUE(c.graph.adjacent_ids(6, 1));
    EXPECT_FALSE(c.graph.adjacent_ids(5, 6));
}

TEST(Generate, SeedsAreInTheirClasses) {
    Rng rng(1);
    for (int t = 0; t < 50; ++t) {
        Graph c = random_chordal(30, 5, rng);
        EXPECT_TRUE(is_connected(c));
        EXPECT_TRUE(is_chordal(c));
        Graph b = random_sparse_bipartite(25, rng);
        EXPECT_TRUE(is_connected(b));
        EXPECT_TRUE(is_sparse_bipartite(b));
        Graph p = random_seed(SeedKind::petersen_sub, 7, rng);
        EXPECT_TRUE(is_connected(p));
        EXPECT_TRUE(embed_in_named(p, NamedTarget::petersen));
    }
}

TEST(Generate, ComposedGraphsAreLongUnichordFree) {
    Rng rng(2);
    InClassOptions opt;
    opt.min_seed = 4;
    opt.max_seed = 7;
    opt.universal_probability = 0.1;
    for (int t = 0; t < 150; ++t) {
        Graph g = random_in_class_graph(10, rng, opt);
        if (g.order() > 14) continue;
        EXPECT_TRUE(is_connected(g));
        EXPECT_FALSE(find_long_unichord(g)) << emit_json(g);
    }
}

TEST(Generate, Deterministic) {
    Rng a(77), b(77);
    EXPECT_EQ(random_in_class_graph(200, a), random_in_class_graph(200, b));
}
