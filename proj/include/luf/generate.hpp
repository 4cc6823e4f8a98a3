#pragma once

// Seeded random graphs: base-class seeds and long-unichord-free graphs built
// from them by cutvertex gluing, amalgam composition and universal vertices.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "luf/basics.hpp"
#include "luf/compose.hpp"
#include "luf/graph.hpp"
#include "luf/named.hpp"

namespace luf {

using Rng = std::mt19937_64;

namespace detail {

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool chance(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

}  // namespace detail

/// Same graph with local index i renamed to ids[i].
inline Graph relabel(const Graph& g, const std::vector<VertexId>& ids) {
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(ids[static_cast<std::size_t>(g.index(u))], ids[static_cast<std::size_t>(g.index(v))]);
    return Graph::from_edges(VertexSet(ids.begin(), ids.end()), e);
}

/// Identifiers renamed to 0..n-1 preserving order.
inline Graph compact(const Graph& g) {
    std::vector<VertexId> ids(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) ids[static_cast<std::size_t>(i)] = i;
    return relabel(g, ids);
}

/// Connected chordal graph: each new vertex is attached to a clique of the
/// current graph, so the reverse insertion order is a perfect elimination ordering.
inline Graph random_chordal(int n, int max_clique, Rng& rng) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    auto adjacent = [&](int a, int b) {
        const auto& x = adj[static_cast<std::size_t>(a)];
        return std::find(x.begin(), x.end(), b) != x.end();
    };
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        int x = detail::uniform(rng, 0, v - 1);
        std::vector<int> clique{x};
        std::vector<int> cand = adj[static_cast<std::size_t>(x)];
        std::shuffle(cand.begin(), cand.end(), rng);
        int want = detail::uniform(rng, 1, std::max(1, max_clique - 1));
        for (int y : cand) {
            if (static_cast<int>(clique.size()) >= want) break;
            if (std::all_of(clique.begin(), clique.end(), [&](int c) { return adjacent(c, y); })) clique.push_back(y);
        }
        for (int c : clique) {
            adj[static_cast<std::size_t>(v)].push_back(c);
            adj[static_cast<std::size_t>(c)].push_back(v);
            edges.emplace_back(c, v);
        }
    }
    return Graph::from_edges(n, edges);
}

/// Connected bipartite graph whose second side has degrees 1 or 2. `n` counts
/// both sides; about a third of the vertices form the dense side.
inline Graph random_sparse_bipartite(int n, Rng& rng) {
    if (n <= 2) return path_graph(std::max(n, 1));
    int a = std::max(1, n / 3);
    std::vector<Edge> edges;
    VertexId next = a;
    // Spanning tree on the dense side, each tree edge subdivided.
    for (int v = 1; v < a && next < n; ++v) {
        int p = detail::uniform(rng, 0, v - 1);
        edges.emplace_back(p, next);
        edges.emplace_back(v, next);
        ++next;
    }
    for (; next < n; ++next) {
        int p = detail::uniform(rng, 0, a - 1);
        edges.emplace_back(p, next);
        if (a > 1 && detail::chance(rng, 0.6)) {
            int q = detail::uniform(rng, 0, a - 2);
            if (q >= p) ++q;
            edges.emplace_back(q, next);
        }
    }
    Graph g = Graph::from_edges(n, edges);
    if (!is_connected(g)) {
        // Dense-side vertices left isolated when n was too small for the tree.
        std::vector<int> keep;
        std::vector<int> label;
        component_labels(g, label);
        for (int i = 0; i < g.order(); ++i)
            if (label[static_cast<std::size_t>(i)] == label[0]) keep.push_back(i);
        g = compact(g.induced_local(keep));
    }
    return g;
}

/// Connected induced subgraph of `host` on `k` vertices, grown from a random vertex.
inline Graph random_connected_induced(const Graph& host, int k, Rng& rng) {
    k = std::clamp(k, 1, host.order());
    std::vector<int> chosen{detail::uniform(rng, 0, host.order() - 1)};
    std::vector<char> in(static_cast<std::size_t>(host.order()), 0);
    in[static_cast<std::size_t>(chosen[0])] = 1;
    while (static_cast<int>(chosen.size()) < k) {
        std::vector<int> frontier;
        for (int x : chosen)
            for (int y : host.neighbors(x))
                if (!in[static_cast<std::size_t>(y)]) frontier.push_back(y);
        std::sort(frontier.begin(), frontier.end());
        frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
        if (frontier.empty()) break;
        int y = frontier[static_cast<std::size_t>(detail::uniform(rng, 0, static_cast<int>(frontier.size()) - 1))];
        in[static_cast<std::size_t>(y)] = 1;
        chosen.push_back(y);
    }
    return compact(host.induced_local(chosen));
}

enum class SeedKind { chordal, sparse_bipartite, petersen_sub, heawood_sub, odd_cycle, clique };

/// One connected base-class graph on identifiers 0..k-1.
inline Graph random_seed(SeedKind kind, int size, Rng& rng) {
    switch (kind) {
        case SeedKind::chordal: return random_chordal(std::max(size, 2), 5, rng);
        case SeedKind::sparse_bipartite: return random_sparse_bipartite(std::max(size, 3), rng);
        case SeedKind::petersen_sub: return random_connected_induced(petersen_graph(), std::clamp(size, 4, 10), rng);
        case SeedKind::heawood_sub: return random_connected_induced(heawood_graph(), std::clamp(size, 4, 14), rng);
        case SeedKind::odd_cycle: return cycle_graph(std::max(5, size | 1));
        case SeedKind::clique: return clique_graph(std::clamp(size, 2, 6));
    }
    return path_graph(2);
}

struct InClassOptions {
    int min_seed = 4;
    int max_seed = 14;
    double amalgam_weight = 0.45;
    double universal_probability = 0.01;
    int max_universal = 2;
};

namespace detail {

// Vertices of N(u) adjacent to every other vertex of N(u); any subset of them
// can serve as K for an amalgam with marker u.
inline VertexSet amalgam_k_candidates(const Graph& g, VertexId u) {
    VertexSet nb = g.neighbor_ids(u), out;
    for (VertexId x : nb) {
        bool all = true;
        for (VertexId y : nb)
            if (y != x && !g.adjacent_ids(x, y)) {
                all = false;
                break;
            }
        if (all) out.push_back(x);
    }
    return out;
}

inline VertexSet random_subset(const VertexSet& s, int k, Rng& rng) {
    std::vector<VertexId> v(s.begin(), s.end());
    std::shuffle(v.begin(), v.end(), rng);
    v.resize(static_cast<std::size_t>(k));
    return make_set(std::move(v));
}

}  // namespace detail

/// A connected long-unichord-free graph on roughly `target_n` vertices (ids
/// 0..n-1), built from base-class seeds by cutvertex gluing, amalgam
/// composition and adding universal vertices.
inline Graph random_in_class_graph(int target_n, Rng& rng, const InClassOptions& opt = {}) {
    static constexpr SeedKind kinds[] = {SeedKind::chordal, SeedKind::sparse_bipartite, SeedKind::petersen_sub,
                                         SeedKind::heawood_sub, SeedKind::odd_cycle, SeedKind::clique};
    auto next_seed = [&] {
        SeedKind kind = kinds[detail::uniform(rng, 0, 5)];
        return random_seed(kind, detail::uniform(rng, opt.min_seed, opt.max_seed), rng);
    };
    Graph g = next_seed();
    int universals = 0;
    while (g.order() < target_n) {
        if (universals < opt.max_universal && detail::chance(rng, opt.universal_probability)) {
            g = compose({CompositionKind::add_universal}, g).graph;
            ++universals;
            continue;
        }
        Graph s = next_seed();
        VertexId fresh = g.max_id() + 1;
        bool done = false;
        if (detail::chance(rng, opt.amalgam_weight) && g.order() >= 3 && s.order() >= 3) {
            VertexId u2 = g.id(detail::uniform(rng, 0, g.order() - 1));
            VertexId u1 = s.id(detail::uniform(rng, 0, s.order() - 1));
            VertexSet c2 = detail::amalgam_k_candidates(g, u2), c1 = detail::amalgam_k_candidates(s, u1);
            int d2 = g.degree(g.index(u2)), d1 = s.degree(s.index(u1));
            int cap = std::min({static_cast<int>(c2.size()), static_cast<int>(c1.size()), d2 - 1, d1 - 1,
                                g.order() - 3, s.order() - 3, 3});
            if (d1 >= 1 && d2 >= 1 && cap >= 0) {
                int t = detail::chance(rng, 0.5) ? 0 : detail::uniform(rng, 0, cap);
                VertexSet k1 = detail::random_subset(c2, t, rng), k2 = detail::random_subset(c1, t, rng);
                std::vector<VertexId> ids(static_cast<std::size_t>(s.order()));
                VertexId next = fresh;
                for (int i = 0; i < s.order(); ++i) {
                    auto it = std::find(k2.begin(), k2.end(), s.id(i));
                    ids[static_cast<std::size_t>(i)] = it != k2.end() ? k1[static_cast<std::size_t>(it - k2.begin())] : next++;
                }
                Graph s2 = relabel(s, ids);
                VertexId u1r = ids[static_cast<std::size_t>(s.index(u1))];
                g = compose({CompositionKind::amalgam, u2, u1r}, g, s2).graph;
                done = true;
            }
        }
        if (!done) {
            VertexId at = g.id(detail::uniform(rng, 0, g.order() - 1));
            VertexId from = s.id(detail::uniform(rng, 0, s.order() - 1));
            std::vector<VertexId> ids(static_cast<std::size_t>(s.order()));
            VertexId next = fresh;
            for (int i = 0; i < s.order(); ++i) ids[static_cast<std::size_t>(i)] = s.id(i) == from ? at : next++;
            g = compose({CompositionKind::cutvertex_glue}, g, relabel(s, ids)).graph;
        }
    }
    return compact(g);
}

}  // namespace luf
