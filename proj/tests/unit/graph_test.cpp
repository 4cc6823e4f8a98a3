#include <gtest/gtest.h>

#include "luf/io.hpp"
#include "luf/named.hpp"

using namespace luf;

TEST(Graph, FromEdgesRejectsLoopsAndUnknownVertices) {
    EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), PreconditionError);
    EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), PreconditionError);
}

TEST(Graph, ParallelEdgesMerge) {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
    EXPECT_EQ(g.edge_count(), 2u);
}

TEST(Graph, InducedSubgraphKeepsIdentifiers) {
    Graph h = induced_subgraph(house_graph(), {0, 1, 4});
    EXPECT_EQ(h.ids(), (VertexSet{0, 1, 4}));
    EXPECT_TRUE(is_clique(h));
    EXPECT_EQ(induced_subgraph(house_graph(), house_graph().ids()), house_graph());
    Graph p = induced_subgraph(cycle_graph(5), {1, 2, 3, 4});
    EXPECT_EQ(p.edge_count(), 3u);
    EXPECT_THROW(induced_subgraph(cycle_graph(5), {7}), PreconditionError);
}

TEST(Graph, Components) {
    EXPECT_TRUE(components(Graph{}).empty());
    EXPECT_EQ(components(house_graph()).size(), 1u);
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);
    e.insert(e.end(), {{5, 6}, {6, 7}, {7, 5}});
    auto cs = components(Graph::from_edges(8, e));
    ASSERT_EQ(cs.size(), 2u);
    EXPECT_EQ(cs[0].size(), 5u);
    EXPECT_EQ(cs[1].size(), 3u);
}

TEST(Graph, NamedGraphs) {
    Graph p = petersen_graph();
    EXPECT_EQ(p.order(), 10);
    EXPECT_EQ(p.edge_count(), 15u);
    for (int i = 0; i < 10; ++i) EXPECT_EQ(p.degree(i), 3);
    Graph h = heawood_graph();
    EXPECT_EQ(h.order(), 14);
    EXPECT_EQ(h.edge_count(), 21u);
    for (int i = 0; i < 14; ++i) EXPECT_EQ(h.degree(i), 3);
    EXPECT_EQ(house_graph().edge_count(), 6u);
    EXPECT_EQ(named_graph("cycle(5)"), cycle_graph(5));
    EXPECT_EQ(named_graph("clique:4"), clique_graph(4));
    EXPECT_THROW(named_graph("dodecahedron"), PreconditionError);
}

namespace {
// Length of a shortest cycle, by BFS from every vertex.
int girth(const Graph& g) {
    int best = 1 << 30;
    for (int s = 0; s < g.order(); ++s) {
        std::vector<int> dist(static_cast<std::size_t>(g.order()), -1), par(static_cast<std::size_t>(g.order()), -1);
        std::vector<int> q{s};
        dist[static_cast<std::size_t>(s)] = 0;
        for (std::size_t k = 0; k < q.size(); ++k)
            for (int y : g.neighbors(q[k])) {
                if (dist[static_cast<std::size_t>(y)] < 0) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(q[k])] + 1;
                    par[static_cast<std::size_t>(y)] = q[k];
                    q.push_back(y);
                } else if (par[static_cast<std::size_t>(q[k])] != y) {
                    best = std::min(best, dist[static_cast<std::size_t>(y)] + dist[static_cast<std::size_t>(q[k])] + 1);
                }
            }
    }
    return best;
}
}  // namespace

TEST(Graph, Girth) {
    EXPECT_EQ(girth(petersen_graph()), 5);
    EXPECT_EQ(girth(heawood_graph()), 6);
}

TEST(Io, DimacsPath) {
    auto r = load_dimacs("p edge 3 2\ne 1 2\ne 2 3\n");
    EXPECT_EQ(r.graph.ids(), (VertexSet{1, 2, 3}));
    EXPECT_EQ(r.graph.edge_count(), 2u);
    EXPECT_TRUE(r.graph.adjacent_ids(1, 2));
    EXPECT_FALSE(r.graph.adjacent_ids(1, 3));
}

TEST(Io, JsonHouse) {
    auto r = load_json(R"({"n":5,"edges":[[0,1],[1,2],[2,3],[3,0],[4,0],[4,1]]})");
    EXPECT_EQ(r.graph, house_graph());
}

TEST(Io, LoopsAreErrorsDuplicatesAreCounted) {
    try {
        load_dimacs("p edge 2 1\ne 1 1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(load_json(R"({"n":2,"edges":[[1,1]]})"), ParseError);
    auto r = load_dimacs("p edge 2 2\ne 1 2\ne 2 1\n");
    EXPECT_EQ(r.duplicate_edges, 1u);
    EXPECT_EQ(r.graph.edge_count(), 1u);
}

TEST(Io, ParseErrorsCarryLines) {
    try {
        load_dimacs("c hi\np edge 3 1\ne 1 9\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(load_dimacs("e 1 2\n"), ParseError);
    EXPECT_THROW(load_dimacs("p edge 2 1\nx 1 2\n"), ParseError);
    EXPECT_THROW(load_json("{\"n\": 3, \"edges\": [[0,"), ParseError);
}

TEST(Io, RoundTripIsBitExact) {
    for (const Graph& g : {petersen_graph(), heawood_graph(), house_graph(), cycle_graph(7)}) {
        std::string d = emit_dimacs(g);
        Graph gd = load_dimacs(d).graph;
        EXPECT_EQ(emit_dimacs(gd), d);
        std::string j = emit_json(g);
        Graph gj = load_json(j).graph;
        EXPECT_EQ(gj, g);
        EXPECT_EQ(emit_json(gj), j);
    }
}
