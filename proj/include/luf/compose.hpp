#pragma once

// The reverse of each decomposition: build a graph from smaller pieces.
//
// Pieces are identified by vertex identifiers. Operations that glue along a
// common set (cutvertex, clique, amalgam, proper 2-cutset) take that set to be
// the identifiers shared by G1 and G2; the others need disjoint identifiers.

#include <optional>
#include <string>

#include <json.hpp>

#include "luf/decomp.hpp"
#include "luf/error.hpp"
#include "luf/graph.hpp"
#include "luf/split.hpp"

namespace luf {

enum class CompositionKind {
    disjoint_union,
    cutvertex_glue,
    clique_glue,
    one_join,
    amalgam,
    proper_2cutset,
    add_universal,
    substitution
};

inline const char* to_string(CompositionKind k) {
    switch (k) {
        case CompositionKind::disjoint_union: return "disjoint-union";
        case CompositionKind::cutvertex_glue: return "cutvertex-glue";
        case CompositionKind::clique_glue: return "clique-glue";
        case CompositionKind::one_join: return "one-join";
        case CompositionKind::amalgam: return "amalgam";
        case CompositionKind::proper_2cutset: return "proper-2cutset";
        case CompositionKind::add_universal: return "add-universal";
        case CompositionKind::substitution: return "substitution";
    }
    return "?";
}

inline CompositionKind composition_kind_from_string(const std::string& s) {
    for (auto k : {CompositionKind::disjoint_union, CompositionKind::cutvertex_glue, CompositionKind::clique_glue,
                   CompositionKind::one_join, CompositionKind::amalgam, CompositionKind::proper_2cutset,
                   CompositionKind::add_universal, CompositionKind::substitution})
        if (s == to_string(k)) return k;
    throw PreconditionError("unknown composition kind '" + s + "'");
}

/// Which composition to perform, and its marker vertices.
///
///   one-join, amalgam:  marker1 = u2 in G1, marker2 = u1 in G2.
///   proper-2cutset:     marker1 = x2 in G1, marker2 = x1 in G2.
///   substitution:       marker1 = the vertex of G1 replaced by G2.
///   add-universal:      vertex = identifier of the new vertex (default: max id + 1).
struct CompositionSpec {
    CompositionKind kind = CompositionKind::disjoint_union;
    VertexId marker1 = -1;
    VertexId marker2 = -1;
    VertexId vertex = -1;
};

/// The composed graph and, when the operation corresponds to a split kind,
/// the split it plants.
struct Composition {
    Graph graph;
    std::optional<Split> split;
};

namespace detail {

[[noreturn]] inline void compose_fail(CompositionKind k, const std::string& clause) {
    throw PreconditionError(std::string("compose ") + to_string(k) + ": " + clause);
}

inline Graph graph_union(const Graph& g1, const Graph& g2, const VertexSet& drop, const std::vector<Edge>& extra) {
    VertexSet ids = set_difference(set_union(g1.ids(), g2.ids()), drop);
    std::vector<Edge> edges;
    for (const Graph* g : {&g1, &g2})
        for (auto [a, b] : g->edges()) {
            if (!contains(drop, a) && !contains(drop, b)) edges.emplace_back(a, b);
        }
    edges.insert(edges.end(), extra.begin(), extra.end());
    return Graph::from_edges(std::move(ids), edges);
}

inline void check_shared_part_agrees(CompositionKind k, const Graph& g1, const Graph& g2, const VertexSet& shared) {
    for (VertexId u : shared)
        for (VertexId v : shared)
            if (u < v && g1.adjacent_ids(u, v) != g2.adjacent_ids(u, v)) compose_fail(k, "G1 and G2 disagree on the shared vertices");
}

}  // namespace detail

inline Composition compose(const CompositionSpec& spec, const Graph& g1, const std::optional<Graph>& g2_opt = std::nullopt) {
    const auto kind = spec.kind;
    Composition out;
    if (kind == CompositionKind::add_universal) {
        VertexId v = spec.vertex >= 0 ? spec.vertex : (g1.empty() ? 0 : g1.max_id() + 1);
        if (g1.has_vertex(v)) detail::compose_fail(kind, "new vertex id already in use");
        out.graph = g1.with_vertex(v, g1.ids());
        out.split = Split{SplitKind::universal_set, {v}, {}, {}, {}, {}, {}, -1, -1};
        return out;
    }
    if (!g2_opt) detail::compose_fail(kind, "second graph required");
    const Graph& g2 = *g2_opt;
    const VertexSet shared = set_intersection(g1.ids(), g2.ids());

    switch (kind) {
        case CompositionKind::disjoint_union:
            if (!shared.empty()) detail::compose_fail(kind, "graphs share vertices");
            out.graph = detail::graph_union(g1, g2, {}, {});
            return out;

        case CompositionKind::cutvertex_glue:
        case CompositionKind::clique_glue: {
            if (kind == CompositionKind::cutvertex_glue && shared.size() != 1) detail::compose_fail(kind, "graphs must share exactly one vertex");
            if (!is_clique_set(g1, shared) || !is_clique_set(g2, shared)) detail::compose_fail(kind, "shared vertices are not a clique");
            if (g1.order() == static_cast<int>(shared.size()) || g2.order() == static_cast<int>(shared.size()))
                detail::compose_fail(kind, "each side needs a vertex outside the shared clique");
            out.graph = detail::graph_union(g1, g2, {}, {});
            if (shared.size() == 1) {
                Split s;
                s.kind = SplitKind::cutvertex;
                s.k = shared;
                s.x1 = set_difference(g1.ids(), shared);
                s.x2 = set_difference(g2.ids(), shared);
                out.split = s;
            }
            return out;
        }

        case CompositionKind::one_join:
        case CompositionKind::amalgam: {
            const VertexId u2 = spec.marker1, u1 = spec.marker2;
            if (kind == CompositionKind::one_join && !shared.empty()) detail::compose_fail(kind, "graphs share vertices");
            if (!g1.has_vertex(u2) || contains(shared, u2)) detail::compose_fail(kind, "marker u2 must be a vertex of G1 outside K");
            if (!g2.has_vertex(u1) || contains(shared, u1)) detail::compose_fail(kind, "marker u1 must be a vertex of G2 outside K");
            if (kind == CompositionKind::one_join && (g1.order() < 3 || g2.order() < 3)) detail::compose_fail(kind, "blocks need at least 3 vertices");
            const VertexSet& k = shared;
            if (!is_clique_set(g1, k)) detail::compose_fail(kind, "K is not a clique");
            detail::check_shared_part_agrees(kind, g1, g2, k);
            if (static_cast<int>(k.size()) > g1.order() - 3 || static_cast<int>(k.size()) > g2.order() - 3)
                detail::compose_fail(kind, "|K| > |V(G_i)| - 3");
            VertexSet n2 = g1.neighbor_ids(u2), n1 = g2.neighbor_ids(u1);
            if (!is_subset(k, n2) || !is_subset(k, n1)) detail::compose_fail(kind, "marker neighborhood must contain K");
            VertexSet a1 = set_difference(n2, k), a2 = set_difference(n1, k);
            if (a1.empty() || a2.empty()) detail::compose_fail(kind, "A_i must be nonempty");
            for (VertexId c : k)
                for (const auto& [g, a] : {std::pair{&g1, &a1}, std::pair{&g2, &a2}})
                    for (VertexId x : *a)
                        if (!g->adjacent_ids(c, x)) detail::compose_fail(kind, "A_i is not K-complete");
            std::vector<Edge> extra;
            for (VertexId x : a1)
                for (VertexId y : a2) extra.emplace_back(x, y);
            out.graph = detail::graph_union(g1, g2, make_set({u1, u2}), extra);
            Split s;
            s.kind = SplitKind::amalgam;
            s.k = k;
            s.a1 = a1;
            s.a2 = a2;
            s.x1 = set_difference(set_minus(g1.ids(), u2), k);
            s.x2 = set_difference(set_minus(g2.ids(), u1), k);
            out.split = s;
            return out;
        }

        case CompositionKind::proper_2cutset: {
            const VertexId x2 = spec.marker1, x1 = spec.marker2;
            if (shared.size() != 2) detail::compose_fail(kind, "graphs must share exactly the pair a, b");
            const VertexId a = shared[0], b = shared[1];
            if (g1.adjacent_ids(a, b) || g2.adjacent_ids(a, b)) detail::compose_fail(kind, "a and b must be nonadjacent");
            if (!g1.has_vertex(x2) || contains(shared, x2) || !g1.adjacent_ids(x2, a) || !g1.adjacent_ids(x2, b))
                detail::compose_fail(kind, "x2 must be a common neighbor of a and b in G1");
            if (!g2.has_vertex(x1) || contains(shared, x1) || !g2.adjacent_ids(x1, a) || !g2.adjacent_ids(x1, b))
                detail::compose_fail(kind, "x1 must be a common neighbor of a and b in G2");
            if (g1.order() < 5 || g2.order() < 5) detail::compose_fail(kind, "each side needs at least two vertices besides a, b and the marker");
            Split s;
            s.kind = SplitKind::proper_2cutset;
            s.a = a;
            s.b = b;
            s.x1 = set_difference(set_minus(g1.ids(), x2), shared);
            s.x2 = set_difference(set_minus(g2.ids(), x1), shared);
            if (!detail::has_ab_path(induced_subgraph(g1, set_minus(g1.ids(), x2)), s.x1, a, b))
                detail::compose_fail(kind, "no a-b path in G1 avoiding x2");
            if (!detail::has_ab_path(induced_subgraph(g2, set_minus(g2.ids(), x1)), s.x2, a, b))
                detail::compose_fail(kind, "no a-b path in G2 avoiding x1");
            out.graph = detail::graph_union(g1, g2, make_set({x1, x2}), {});
            out.split = s;
            return out;
        }

        case CompositionKind::substitution: {
            const VertexId v = spec.marker1;
            if (!shared.empty()) detail::compose_fail(kind, "graphs share vertices");
            if (!g1.has_vertex(v)) detail::compose_fail(kind, "substituted vertex not in G1");
            if (g1.order() < 2 || g2.order() < 2) detail::compose_fail(kind, "both graphs need at least two vertices");
            std::vector<Edge> extra;
            for (VertexId x : g1.neighbor_ids(v))
                for (VertexId h : g2.ids()) extra.emplace_back(x, h);
            out.graph = detail::graph_union(g1, g2, {v}, extra);
            return out;
        }

        case CompositionKind::add_universal: break;
    }
    throw InternalError("compose: unhandled kind");
}

inline nlohmann::json to_json(const CompositionSpec& s) {
    nlohmann::json j{{"kind", to_string(s.kind)}};
    if (s.marker1 >= 0) j["marker1"] = s.marker1;
    if (s.marker2 >= 0) j["marker2"] = s.marker2;
    if (s.vertex >= 0) j["vertex"] = s.vertex;
    return j;
}

}  // namespace luf
