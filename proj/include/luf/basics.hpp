#pragma once

// Leaf classes: chordal, sparse bipartite, clique, induced subgraphs of the
// Petersen and Heawood graphs; diamond-freeness; unichord-freeness.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "luf/decomp.hpp"
#include "luf/error.hpp"
#include "luf/graph.hpp"
#include "luf/named.hpp"

namespace luf {

/// Lex-BFS visit order as local indices.
inline std::vector<int> lex_bfs_order(const Graph& g) {
    const int n = g.order();
    // Partition refinement: `seq` holds the vertices, each cell is a
    // contiguous range of it, and cells appear in lexicographic label order.
    std::vector<int> seq(static_cast<std::size_t>(n)), pos(static_cast<std::size_t>(n)), cell(static_cast<std::size_t>(n), 0);
    std::vector<int> cell_start{0}, split_into{-1}, split_stamp{-1};
    for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = pos[static_cast<std::size_t>(i)] = i;
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int v = seq[static_cast<std::size_t>(i)];
        visited[static_cast<std::size_t>(v)] = 1;
        ++cell_start[static_cast<std::size_t>(cell[static_cast<std::size_t>(v)])];
        for (int w : g.neighbors(v)) {
            if (visited[static_cast<std::size_t>(w)]) continue;
            int c = cell[static_cast<std::size_t>(w)];
            auto uc = static_cast<std::size_t>(c);
            if (split_stamp[uc] != i) {
                split_stamp[uc] = i;
                split_into[uc] = static_cast<int>(cell_start.size());
                cell_start.push_back(cell_start[uc]);
                split_into.push_back(-1);
                split_stamp.push_back(-1);
            }
            int nc = split_into[uc];
            // Move w to the front of cell c, then hand that slot to the new cell.
            int front = cell_start[uc];
            int other = seq[static_cast<std::size_t>(front)];
            std::swap(seq[static_cast<std::size_t>(front)], seq[static_cast<std::size_t>(pos[static_cast<std::size_t>(w)])]);
            pos[static_cast<std::size_t>(other)] = pos[static_cast<std::size_t>(w)];
            pos[static_cast<std::size_t>(w)] = front;
            cell[static_cast<std::size_t>(w)] = nc;
            ++cell_start[uc];
        }
    }
    return seq;
}

/// A perfect elimination ordering (vertex ids) if G is chordal.
inline std::optional<std::vector<VertexId>> is_chordal(const Graph& g) {
    const int n = g.order();
    auto visit = lex_bfs_order(g);
    std::vector<int> when(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) when[static_cast<std::size_t>(visit[static_cast<std::size_t>(i)])] = i;
    // In the reverse visit order each vertex's earlier-visited neighbors must
    // form a clique; it suffices that they all lie in the closed neighborhood
    // of the latest of them.
    for (int v = 0; v < n; ++v) {
        int parent = -1;
        for (int w : g.neighbors(v))
            if (when[static_cast<std::size_t>(w)] < when[static_cast<std::size_t>(v)] &&
                (parent < 0 || when[static_cast<std::size_t>(w)] > when[static_cast<std::size_t>(parent)]))
                parent = w;
        if (parent < 0) continue;
        for (int w : g.neighbors(v))
            if (w != parent && when[static_cast<std::size_t>(w)] < when[static_cast<std::size_t>(v)] && !g.adjacent(parent, w))
                return std::nullopt;
    }
    std::vector<VertexId> peo;
    for (int i = n - 1; i >= 0; --i) peo.push_back(g.id(visit[static_cast<std::size_t>(i)]));
    return peo;
}

/// True iff `peo` is a perfect elimination ordering of g.
inline bool is_perfect_elimination_ordering(const Graph& g, const std::vector<VertexId>& peo) {
    if (make_set(std::vector<VertexId>(peo)) != g.ids() || peo.size() != g.ids().size()) return false;
    std::vector<int> rank(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < peo.size(); ++i) rank[static_cast<std::size_t>(g.index(peo[i]))] = static_cast<int>(i);
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> later;
        for (int w : g.neighbors(v))
            if (rank[static_cast<std::size_t>(w)] > rank[static_cast<std::size_t>(v)]) later.push_back(w);
        for (std::size_t i = 0; i < later.size(); ++i)
            for (std::size_t j = i + 1; j < later.size(); ++j)
                if (!g.adjacent(later[i], later[j])) return false;
    }
    return true;
}

struct Bipartition {
    VertexSet a;
    VertexSet b;  ///< every vertex of b has degree at most 2
};

/// A bipartition whose second side has only vertices of degree <= 2.
inline std::optional<Bipartition> is_sparse_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    Bipartition out;
    for (int s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> comp{s};
        side[static_cast<std::size_t>(s)] = 0;
        for (std::size_t k = 0; k < comp.size(); ++k) {
            int x = comp[k];
            for (int y : g.neighbors(x)) {
                if (side[static_cast<std::size_t>(y)] < 0) {
                    side[static_cast<std::size_t>(y)] = 1 - side[static_cast<std::size_t>(x)];
                    comp.push_back(y);
                } else if (side[static_cast<std::size_t>(y)] == side[static_cast<std::size_t>(x)]) {
                    return std::nullopt;
                }
            }
        }
        bool side1_sparse = true, side0_sparse = true;
        for (int x : comp) {
            if (g.degree(x) <= 2) continue;
            (side[static_cast<std::size_t>(x)] == 0 ? side0_sparse : side1_sparse) = false;
        }
        if (!side0_sparse && !side1_sparse) return std::nullopt;
        int sparse = side1_sparse ? 1 : 0;
        for (int x : comp) (side[static_cast<std::size_t>(x)] == sparse ? out.b : out.a).push_back(g.id(x));
    }
    out.a = make_set(std::move(out.a));
    out.b = make_set(std::move(out.b));
    return out;
}

/// Injective map (vertex, target vertex) that preserves and reflects adjacency.
using Embedding = std::vector<std::pair<VertexId, VertexId>>;

namespace detail {

inline bool has_triangle(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (v > u)
                for (int w : g.neighbors(v))
                    if (w > v && g.adjacent(u, w)) return true;
    return false;
}

inline std::optional<Embedding> embed_into(const Graph& g, const Graph& t) {
    const int n = g.order();
    if (n > t.order()) return std::nullopt;
    int tmax = 0;
    for (int i = 0; i < t.order(); ++i) tmax = std::max(tmax, t.degree(i));
    for (int i = 0; i < n; ++i)
        if (g.degree(i) > tmax) return std::nullopt;
    if (has_triangle(g)) return std::nullopt;
    if (n == 0) return Embedding{};
    // BFS order per component keeps most vertices attached to a mapped neighbor.
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        seen[static_cast<std::size_t>(s)] = 1;
        std::size_t head = order.size();
        order.push_back(s);
        for (; head < order.size(); ++head)
            for (int y : g.neighbors(order[head]))
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    order.push_back(y);
                }
    }
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(t.order()), 0);
    auto fits = [&](int k, int target) {
        int v = order[static_cast<std::size_t>(k)];
        for (int j = 0; j < k; ++j) {
            int w = order[static_cast<std::size_t>(j)];
            if (g.adjacent(v, w) != t.adjacent(target, map[static_cast<std::size_t>(w)])) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int k) -> bool {
        if (k == n) return true;
        int v = order[static_cast<std::size_t>(k)];
        for (int target = 0; target < t.order(); ++target) {
            if (used[static_cast<std::size_t>(target)] || t.degree(target) < g.degree(v) || !fits(k, target)) continue;
            used[static_cast<std::size_t>(target)] = 1;
            map[static_cast<std::size_t>(v)] = target;
            if (self(self, k + 1)) return true;
            used[static_cast<std::size_t>(target)] = 0;
            map[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    Embedding e;
    for (int v = 0; v < n; ++v) e.emplace_back(g.id(v), t.id(map[static_cast<std::size_t>(v)]));
    return e;
}

}  // namespace detail

enum class NamedTarget { petersen, heawood };

/// Embedding of g as an induced subgraph of the Petersen or Heawood graph.
inline std::optional<Embedding> embed_in_named(const Graph& g, NamedTarget target) {
    static const Graph petersen = petersen_graph();
    static const Graph heawood = heawood_graph();
    return detail::embed_into(g, target == NamedTarget::petersen ? petersen : heawood);
}

inline bool is_induced_embedding(const Graph& g, const Graph& target, const Embedding& e) {
    if (e.size() != static_cast<std::size_t>(g.order())) return false;
    VertexSet src, img;
    for (auto [v, t] : e) {
        if (!g.has_vertex(v) || !target.has_vertex(t)) return false;
        src.push_back(v);
        img.push_back(t);
    }
    if (make_set(src).size() != e.size() || make_set(img).size() != e.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (g.adjacent_ids(e[i].first, e[j].first) != target.adjacent_ids(e[i].second, e[j].second)) return false;
    return true;
}

/// Four vertices (u, v, x, y): uv an edge, x and y nonadjacent common neighbors of u and v.
using DiamondWitness = std::array<VertexId, 4>;

/// Returns a diamond if one exists, nullopt when g is diamond-free.
/// G is diamond-free iff every neighborhood induces a disjoint union of cliques.
inline std::optional<DiamondWitness> is_diamond_free(const Graph& g) {
    const int n = g.order();
    std::vector<int> mark(static_cast<std::size_t>(n), -1), comp(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        for (int w : nb) mark[static_cast<std::size_t>(w)] = v, comp[static_cast<std::size_t>(w)] = -1;
        for (int s : nb) {
            if (comp[static_cast<std::size_t>(s)] >= 0) continue;
            std::vector<int> part{s};
            comp[static_cast<std::size_t>(s)] = s;
            std::size_t inner_degree_sum = 0;
            for (std::size_t k = 0; k < part.size(); ++k)
                for (int y : g.neighbors(part[k])) {
                    if (mark[static_cast<std::size_t>(y)] != v) continue;
                    ++inner_degree_sum;
                    if (comp[static_cast<std::size_t>(y)] < 0) {
                        comp[static_cast<std::size_t>(y)] = s;
                        part.push_back(y);
                    }
                }
            if (inner_degree_sum == part.size() * (part.size() - 1)) continue;
            // Not a clique: a shortest path x - y - z inside the part gives the diamond v, y, x, z.
            for (int x : part) {
                std::vector<int> dist(static_cast<std::size_t>(n), -1), par(static_cast<std::size_t>(n), -1);
                std::vector<int> queue{x};
                dist[static_cast<std::size_t>(x)] = 0;
                for (std::size_t k = 0; k < queue.size(); ++k) {
                    int a = queue[k];
                    for (int b : g.neighbors(a)) {
                        if (mark[static_cast<std::size_t>(b)] != v || dist[static_cast<std::size_t>(b)] >= 0) continue;
                        dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + 1;
                        par[static_cast<std::size_t>(b)] = a;
                        if (dist[static_cast<std::size_t>(b)] == 2) {
                            int y = a;
                            return DiamondWitness{g.id(v), g.id(y), g.id(x), g.id(b)};
                        }
                        queue.push_back(b);
                    }
                }
            }
            throw InternalError("is_diamond_free: non-clique neighborhood part without an induced P3");
        }
    }
    return std::nullopt;
}

enum class BasicTag { chordal, sparse_bipartite, clique, petersen_sub, heawood_sub, none };

inline const char* to_string(BasicTag t) {
    switch (t) {
        case BasicTag::chordal: return "chordal";
        case BasicTag::sparse_bipartite: return "sparse-bipartite";
        case BasicTag::clique: return "clique";
        case BasicTag::petersen_sub: return "petersen-sub";
        case BasicTag::heawood_sub: return "heawood-sub";
        case BasicTag::none: return "none";
    }
    return "?";
}

/// A classification with its evidence.
struct BasicClass {
    BasicTag tag = BasicTag::none;
    std::vector<VertexId> peo;  ///< chordal
    Bipartition bipartition;    ///< sparse-bipartite
    Embedding embedding;        ///< petersen-sub, heawood-sub
};

inline nlohmann::json to_json(const BasicClass& c) {
    nlohmann::json j{{"tag", to_string(c.tag)}};
    switch (c.tag) {
        case BasicTag::chordal: j["peo"] = c.peo; break;
        case BasicTag::sparse_bipartite:
            j["A"] = c.bipartition.a;
            j["B"] = c.bipartition.b;
            break;
        case BasicTag::petersen_sub:
        case BasicTag::heawood_sub: {
            nlohmann::json m = nlohmann::json::object();
            for (auto [v, t] : c.embedding) m[std::to_string(v)] = t;
            j["embedding"] = m;
            break;
        }
        default: break;
    }
    return j;
}

/// First matching base class for unichord-free graphs:
/// clique, sparse bipartite, induced subgraph of Petersen, of Heawood.
inline BasicClass classify_unichord_free_base(const Graph& g) {
    BasicClass c;
    if (is_clique(g)) {
        c.tag = BasicTag::clique;
        return c;
    }
    if (auto b = is_sparse_bipartite(g)) {
        c.tag = BasicTag::sparse_bipartite;
        c.bipartition = *b;
        return c;
    }
    if (g.order() <= 10)
        if (auto e = embed_in_named(g, NamedTarget::petersen)) {
            c.tag = BasicTag::petersen_sub;
            c.embedding = *e;
            return c;
        }
    if (g.order() <= 14)
        if (auto e = embed_in_named(g, NamedTarget::heawood)) {
            c.tag = BasicTag::heawood_sub;
            c.embedding = *e;
            return c;
        }
    return c;
}

/// True iff the connected graph g has no unichord.
///
/// Decomposes by cutvertex, then 1-join, then proper 2-cutset, and requires
/// every leaf to be a base class. A unichord on a 4-cycle is exactly a
/// diamond, so diamond-freeness is tested first; the blocks of each of these
/// decompositions of a diamond-free graph stay diamond-free.
inline bool is_unichord_free(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("is_unichord_free: graph is disconnected");
    if (is_diamond_free(g)) return false;
    std::vector<Graph> work{g};
    while (!work.empty()) {
        Graph h = std::move(work.back());
        work.pop_back();
        if (classify_unichord_free_base(h).tag != BasicTag::none) continue;
        std::optional<Split> s = find_cutvertex(h);
        if (!s && find_universal_vertices(h).empty()) s = find_one_join(h);
        if (!s) s = find_proper_2cutset(h);
        if (!s) return false;
        Blocks b = blocks(h, *s);
        work.push_back(std::move(b.g1));
        if (b.g2) work.push_back(std::move(*b.g2));
    }
    return true;
}

}  // namespace luf
