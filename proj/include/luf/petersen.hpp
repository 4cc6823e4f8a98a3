#pragma once

// The labeled Petersen graph used by the Petersen splitter.
//
// Labels: c is adjacent to x, y and z; a1..a6 is the 6-cycle left after
// deleting the closed neighborhood of c; x sees a1 and a4, y sees a2 and a5,
// z sees a3 and a6.

#include <array>
#include <optional>
#include <vector>

#include "luf/basics.hpp"
#include "luf/constraint.hpp"
#include "luf/error.hpp"
#include "luf/graph.hpp"
#include "luf/named.hpp"

namespace luf {

enum PetersenLabel : int { kA1 = 0, kA2, kA3, kA4, kA5, kA6, kX, kY, kZ, kC };

inline constexpr std::array<const char*, 10> kPetersenLabelNames = {"a1", "a2", "a3", "a4", "a5", "a6", "x", "y", "z", "c"};

/// The labeled template, with label i as vertex i.
inline Graph petersen_template() {
    std::vector<Edge> e{{kC, kX}, {kC, kY}, {kC, kZ}, {kX, kA1}, {kX, kA4}, {kY, kA2}, {kY, kA5}, {kZ, kA3}, {kZ, kA6}};
    for (int i = 0; i < 6; ++i) e.emplace_back(kA1 + i, kA1 + (i + 1) % 6);
    return Graph::from_edges(10, e);
}

using Permutation10 = std::array<VertexId, 10>;

namespace detail {

// All bijections from `from` onto `to` preserving adjacency both ways.
inline std::vector<Permutation10> petersen_isomorphisms(const Graph& from, const Graph& to) {
    std::vector<Permutation10> out;
    Permutation10 map{};
    map.fill(-1);
    std::array<char, 10> used{};
    auto rec = [&](auto&& self, int k) -> void {
        if (k == 10) {
            out.push_back(map);
            return;
        }
        for (int t = 0; t < 10; ++t) {
            if (used[static_cast<std::size_t>(t)]) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j)
                ok = from.adjacent(k, j) == to.adjacent(t, map[static_cast<std::size_t>(j)]);
            if (!ok) continue;
            used[static_cast<std::size_t>(t)] = 1;
            map[static_cast<std::size_t>(k)] = t;
            self(self, k + 1);
            used[static_cast<std::size_t>(t)] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace detail

/// label -> vertex of petersen_graph(); the first isomorphism in search order.
inline const Permutation10& petersen_labeling() {
    static const Permutation10 labeling = [] {
        auto isos = detail::petersen_isomorphisms(petersen_template(), petersen_graph());
        if (isos.empty()) throw InternalError("petersen template is not the Petersen graph");
        return isos.front();
    }();
    return labeling;
}

/// All 120 automorphisms of petersen_graph(), as vertex permutations.
inline const std::vector<Permutation10>& petersen_automorphisms() {
    static const std::vector<Permutation10> autos = [] {
        Graph p = petersen_graph();
        return detail::petersen_isomorphisms(p, p);
    }();
    return autos;
}

/// Vertices of petersen_graph() carrying the given labels.
inline VertexSet petersen_vertices(std::initializer_list<PetersenLabel> labels) {
    VertexSet s;
    for (PetersenLabel l : labels) s.push_back(petersen_labeling()[static_cast<std::size_t>(l)]);
    return make_set(std::move(s));
}

/// Splitter of an induced subgraph of the Petersen graph, after moving the
/// constraint to canonical position with an automorphism:
///   |K_in| = 2:  K_in -> {a1, a2},            H = {a1..a6, c}
///   |K_in| = 1:  K_in -> {c}, K_plus in {x},  H = {a1..a6, c}
///   K_in empty:  K_plus inside {x, a1},       H = {a1..a6, c, x} - K_plus
/// `embedding` maps every vertex of `gp` into petersen_graph().
inline VertexSet petersen_splitter(const Graph& gp, const Embedding& embedding, const Constraint& c) {
    if (auto why = constraint_violation(gp, c)) throw PreconditionError("petersen_splitter: " + *why);
    std::vector<int> host_of(static_cast<std::size_t>(gp.order()), -1);
    for (auto [v, t] : embedding) host_of[static_cast<std::size_t>(gp.index(v))] = t;
    for (int h : host_of)
        if (h < 0) throw PreconditionError("petersen_splitter: embedding does not cover the graph");
    auto host_set = [&](const VertexSet& s) {
        VertexSet out;
        for (VertexId v : s) out.push_back(host_of[static_cast<std::size_t>(gp.index(v))]);
        return make_set(std::move(out));
    };
    const VertexSet kin = host_set(c.k_in), kplus = host_set(c.k_plus);
    if (kin.size() + kplus.size() > 2) throw PreconditionError("petersen_splitter: constraint larger than an edge");

    const VertexSet a_c = petersen_vertices({kA1, kA2, kA3, kA4, kA5, kA6, kC});
    VertexSet target_in, target_plus_room, keep;
    if (kin.size() == 2) {
        target_in = petersen_vertices({kA1, kA2});
        keep = a_c;
    } else if (kin.size() == 1) {
        target_in = petersen_vertices({kC});
        target_plus_room = petersen_vertices({kX});
        keep = a_c;
    } else {
        target_plus_room = kplus.size() == 2 ? petersen_vertices({kX, kA1}) : petersen_vertices({kX});
        keep = set_with(a_c, petersen_labeling()[kX]);
    }
    for (const Permutation10& tau : petersen_automorphisms()) {
        auto image = [&](const VertexSet& s) {
            VertexSet out;
            for (VertexId v : s) out.push_back(tau[static_cast<std::size_t>(v)]);
            return make_set(std::move(out));
        };
        VertexSet ti = image(kin), tp = image(kplus);
        if (ti != target_in || !is_subset(tp, target_plus_room)) continue;
        VertexSet h;
        for (int i = 0; i < gp.order(); ++i) {
            VertexId t = tau[static_cast<std::size_t>(host_of[static_cast<std::size_t>(i)])];
            if (contains(keep, t) && !contains(tp, t)) h.push_back(gp.id(i));
        }
        return make_set(std::move(h));
    }
    throw InternalError("petersen_splitter: no automorphism moves the constraint to canonical position");
}

/// True iff every odd cycle of g (induced or not) passes through all of
/// `through`. Enumerates simple cycles, so g must be small.
inline bool all_odd_cycles_through(const Graph& g, const VertexSet& through) {
    if (g.order() > 16) throw BoundExceeded("all_odd_cycles_through: graph has more than 16 vertices");
    const int n = g.order();
    std::vector<int> path;
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    bool ok = true;
    // Each cycle is rooted at its smallest vertex.
    auto rec = [&](auto&& self, int root, int v) -> void {
        for (int w : g.neighbors(v)) {
            if (!ok) return;
            if (w == root && path.size() >= 3 && path.size() % 2 == 1) {
                VertexSet ids;
                for (int p : path) ids.push_back(g.id(p));
                if (!is_subset(through, make_set(std::move(ids)))) ok = false;
            }
            if (w <= root || on[static_cast<std::size_t>(w)]) continue;
            on[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            self(self, root, w);
            path.pop_back();
            on[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (int r = 0; r < n && ok; ++r) {
        path = {r};
        on[static_cast<std::size_t>(r)] = 1;
        rec(rec, r, r);
        on[static_cast<std::size_t>(r)] = 0;
    }
    return ok;
}

}  // namespace luf
