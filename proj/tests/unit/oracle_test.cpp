#include <gtest/gtest.h>

#include <random>

#include "luf/io.hpp"
#include "luf/named.hpp"
#include "luf/oracle.hpp"

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

// Reference: a cycle of length >= min_len whose vertex set induces exactly
// the cycle plus one chord, found by enumerating vertex orders.
bool brute_unichord(const Graph& g, int min_len) {
    const int n = g.order();
    for (int k = min_len; k <= n; ++k) {
        std::vector<int> sel(static_cast<std::size_t>(n), 0);
        std::fill(sel.end() - k, sel.end(), 1);
        do {
            std::vector<int> vs;
            for (int i = 0; i < n; ++i)
                if (sel[static_cast<std::size_t>(i)]) vs.push_back(i);
            std::sort(vs.begin() + 1, vs.end());
            do {
                int cycle_edges = 0, extra = 0;
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j) {
                        bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
                        bool adj = g.adjacent(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]);
                        if (consecutive) cycle_edges += adj;
                        else extra += adj;
                    }
                if (cycle_edges == k && extra == 1) return true;
            } while (std::next_permutation(vs.begin() + 1, vs.end()));
        } while (std::next_permutation(sel.begin(), sel.end()));
    }
    return false;
}

}  // namespace

TEST(Oracle, HouseHasLongUnichord) {
    auto w = find_long_unichord(house_graph());
    ASSERT_TRUE(w);
    EXPECT_EQ(w->cycle.size(), 5u);
    EXPECT_FALSE(witness_violation(house_graph(), *w, 5));
    // The chord of the house's 5-cycle is ab.
    EXPECT_EQ(std::minmax(w->chord.first, w->chord.second), std::minmax(0, 1));
}

TEST(Oracle, NoLongUnichordInC5OrPetersen) {
    EXPECT_FALSE(find_long_unichord(cycle_graph(5)));
    EXPECT_FALSE(find_long_unichord(petersen_graph()));
    EXPECT_FALSE(find_unichord(petersen_graph()));
}

TEST(Oracle, UnichordOfDiamond) {
    auto w = find_unichord(diamond_graph());
    ASSERT_TRUE(w);
    EXPECT_EQ(w->cycle.size(), 4u);
    EXPECT_FALSE(witness_violation(diamond_graph(), *w, 4));
    EXPECT_FALSE(find_long_unichord(diamond_graph()));
}

TEST(Oracle, ForestsHaveNoUnichord) {
    EXPECT_FALSE(find_unichord(path_graph(8)));
    Graph star = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    EXPECT_FALSE(find_unichord(star));
}

TEST(Oracle, TwoCyclesJoinedByAnEdgeAreNotAUnichord) {
    // Two triangles joined by one edge: 6 vertices, 7 edges, two adjacent
    // degree-3 vertices, but not a cycle plus a chord.
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}});
    EXPECT_FALSE(find_unichord(g));
}

TEST(Oracle, SubsetCharacterizationMatchesCycleEnumeration) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        int n = 4 + static_cast<int>(rng() % 4);
        Graph g = random_graph(n, 0.45, rng);
        EXPECT_EQ(find_long_unichord(g).has_value(), brute_unichord(g, 5)) << emit_json(g);
        EXPECT_EQ(find_unichord(g).has_value(), brute_unichord(g, 4));
    }
}

TEST(Oracle, WitnessesRevalidate) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_graph(9, 0.35, rng);
        if (auto w = find_long_unichord(g)) { EXPECT_FALSE(witness_violation(g, *w, 5)); }
        if (auto w = find_unichord(g)) { EXPECT_FALSE(witness_violation(g, *w, 4)); }
    }
}

TEST(Oracle, LongUnichordFreeImpliesOnlyShortUnichords) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_graph(8, 0.4, rng);
        if (!find_long_unichord(g))
            if (auto w = find_unichord(g)) { EXPECT_EQ(w->cycle.size(), 4u); }
    }
}

TEST(Oracle, SizeBoundRejectsLargeInputs) {
    EXPECT_THROW(find_long_unichord(cycle_graph(15)), BoundExceeded);
    OracleBounds b;
    b.unichord_max_n = 16;
    EXPECT_FALSE(find_long_unichord(cycle_graph(15), b));
}

TEST(Oracle, MaximalCliques) {
    EXPECT_EQ(maximal_cliques(clique_graph(3)), (std::vector<VertexSet>{{0, 1, 2}}));
    EXPECT_EQ(maximal_cliques(cycle_graph(5)),
              (std::vector<VertexSet>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}));
    // house: {e,a,b}, {a,d}, {d,c}, {c,b}
    EXPECT_EQ(maximal_cliques(house_graph()), (std::vector<VertexSet>{{0, 1, 4}, {0, 3}, {1, 2}, {2, 3}}));
}

TEST(Oracle, MaximalCliquesAreNonNestedAndCover) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        Graph g = random_graph(12, 0.4, rng);
        auto cl = maximal_cliques(g);
        VertexSet cover;
        for (std::size_t i = 0; i < cl.size(); ++i) {
            EXPECT_TRUE(is_clique_set(g, cl[i]));
            cover = set_union(cover, cl[i]);
            for (std::size_t j = 0; j < cl.size(); ++j)
                if (i != j) { EXPECT_FALSE(is_subset(cl[i], cl[j])); }
        }
        EXPECT_EQ(cover, g.ids());
    }
}

TEST(Oracle, CliqueAndChromaticNumbers) {
    EXPECT_EQ(clique_number_exact(petersen_graph()), 2);
    EXPECT_EQ(clique_number_exact(clique_graph(5)), 5);
    EXPECT_EQ(clique_number_exact(house_graph()), 3);
    EXPECT_EQ(chromatic_number_exact(cycle_graph(5)).chi, 3);
    EXPECT_EQ(chromatic_number_exact(petersen_graph()).chi, 3);
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(chromatic_number_exact(clique_graph(n)).chi, n);
}

TEST(Oracle, ChromaticColoringIsProperAndAtLeastOmega) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_graph(8, 0.5, rng);
        auto r = chromatic_number_exact(g);
        EXPECT_GE(r.chi, clique_number_exact(g));
        for (auto [u, v] : g.edges()) EXPECT_NE(r.coloring[static_cast<std::size_t>(u)].second, r.coloring[static_cast<std::size_t>(v)].second);
    }
}

TEST(Oracle, Perfection) {
    EXPECT_FALSE(is_perfect_small(cycle_graph(5)));
    EXPECT_TRUE(is_perfect_small(cycle_graph(6)));
    EXPECT_TRUE(is_perfect_small(house_graph()));
    EXPECT_FALSE(is_perfect_small(petersen_graph()));
    EXPECT_THROW(is_perfect_small(cycle_graph(13)), BoundExceeded);
}

TEST(Oracle, VerifySplitterExamples) {
    EXPECT_TRUE(verify_splitter(cycle_graph(5), {}, {0, 1, 2, 3, 4}));
    EXPECT_TRUE(verify_splitter(clique_graph(3), {{}, {0, 1, 2}}, {}));
    auto bad = verify_splitter(cycle_graph(5), {}, {0, 2});
    EXPECT_FALSE(bad);
    EXPECT_NE(bad.reason.find("misses H"), std::string::npos);
    EXPECT_FALSE(verify_splitter(clique_graph(2), {{0}, {}}, {0, 1}));
    EXPECT_TRUE(verify_splitter(clique_graph(2), {{0}, {}}, {0}));
    EXPECT_THROW(verify_splitter(cycle_graph(5), {{0}, {2}}, {0}), PreconditionError);
}

TEST(Oracle, ExhaustiveSplitterSearch) {
    auto c4 = exhaustive_splitter_search(cycle_graph(4), {}, true);
    ASSERT_TRUE(c4);
    EXPECT_TRUE(verify_splitter(cycle_graph(4), {}, *c4));
    EXPECT_EQ(exhaustive_splitter_search(clique_graph(2), {{0}, {}}, false), (VertexSet{0}));
}
