#pragma once

// Exponential-time ground truth for small graphs.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "luf/constraint.hpp"
#include "luf/detail/cliques.hpp"
#include "luf/detail/exact_coloring.hpp"
#include "luf/error.hpp"
#include "luf/graph.hpp"

namespace luf {

/// Size limits for the exponential procedures. Each is a configuration value.
struct OracleBounds {
    int unichord_max_n = 14;
    int clique_max_n = 64;
    int chromatic_max_n = 40;
    int perfect_max_n = 12;
    int splitter_search_max_n = 12;
    std::chrono::milliseconds chromatic_time_limit{10000};
};

inline OracleBounds& default_oracle_bounds() {
    static OracleBounds bounds;
    return bounds;
}

namespace detail {

inline void require_order(const Graph& g, int bound, const char* what) {
    if (g.order() > bound)
        throw BoundExceeded(std::string(what) + ": " + std::to_string(g.order()) + " vertices exceeds bound " +
                            std::to_string(bound));
}

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> m(static_cast<std::size_t>(g.order()), 0);
    for (int i = 0; i < g.order(); ++i)
        for (int j : g.neighbors(i)) m[static_cast<std::size_t>(i)] |= Mask{1} << j;
    return m;
}

}  // namespace detail

/// A cycle (in order) together with its unique chord.
struct UnichordWitness {
    std::vector<VertexId> cycle;
    Edge chord{-1, -1};

    friend bool operator==(const UnichordWitness&, const UnichordWitness&) = default;
};

inline nlohmann::json to_json(const UnichordWitness& w) {
    return {{"cycle", w.cycle}, {"chord", {w.chord.first, w.chord.second}}};
}

/// Re-checks a witness against `g`: the cycle vertices must induce exactly
/// the cycle edges plus the chord, and the cycle must have length >= min_length.
inline std::optional<std::string> witness_violation(const Graph& g, const UnichordWitness& w, int min_length) {
    const auto k = w.cycle.size();
    if (static_cast<int>(k) < min_length) return "cycle shorter than " + std::to_string(min_length);
    VertexSet s = make_set(std::vector<VertexId>(w.cycle));
    if (s.size() != k) return "repeated cycle vertex";
    for (VertexId v : s)
        if (!g.has_vertex(v)) return "unknown vertex " + std::to_string(v);
    auto pos = [&](VertexId v) -> int {
        auto it = std::find(w.cycle.begin(), w.cycle.end(), v);
        return it == w.cycle.end() ? -1 : static_cast<int>(it - w.cycle.begin());
    };
    int pa = pos(w.chord.first), pb = pos(w.chord.second);
    if (pa < 0 || pb < 0) return "chord endpoint not on the cycle";
    int gap = std::abs(pa - pb);
    if (gap == 1 || gap == static_cast<int>(k) - 1 || gap == 0) return "chord endpoints are consecutive";
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool cycle_edge = j == i + 1 || (i == 0 && j == k - 1);
            bool chord = (static_cast<int>(i) == std::min(pa, pb) && static_cast<int>(j) == std::max(pa, pb));
            bool want = cycle_edge || chord;
            if (g.adjacent_ids(w.cycle[i], w.cycle[j]) != want)
                return want ? "missing edge " + std::to_string(w.cycle[i]) + "-" + std::to_string(w.cycle[j])
                            : "extra chord " + std::to_string(w.cycle[i]) + "-" + std::to_string(w.cycle[j]);
        }
    return std::nullopt;
}

namespace detail {

// Subset S induces a cycle plus one chord iff it has |S|+1 edges, exactly two
// vertices of degree 3 which are adjacent, all others of degree 2, and S minus
// the chord is connected (otherwise it is two cycles joined by an edge).
inline std::optional<UnichordWitness> find_unichord_min(const Graph& g, int min_len, int bound, const char* what) {
    require_order(g, bound, what);
    const int n = g.order();
    const auto adj = adjacency_masks(g);
    const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    // Enumerate by increasing size, then increasing mask, for a deterministic smallest witness.
    for (int size = min_len; size <= n; ++size) {
        for (Mask s = 1; s <= full && s != 0; ++s) {
            if (std::popcount(s) != size) continue;
            int edges2 = 0, deg3a = -1, deg3b = -1;
            bool ok = true;
            for (Mask t = s; t && ok; t &= t - 1) {
                int v = std::countr_zero(t);
                int d = std::popcount(adj[static_cast<std::size_t>(v)] & s);
                edges2 += d;
                if (d == 3) {
                    if (deg3a < 0) deg3a = v;
                    else if (deg3b < 0) deg3b = v;
                    else ok = false;
                } else if (d != 2) {
                    ok = false;
                }
            }
            if (!ok || deg3b < 0 || edges2 != 2 * (size + 1)) continue;
            if (!(adj[static_cast<std::size_t>(deg3a)] >> deg3b & 1)) continue;
            // Walk the cycle avoiding the chord.
            std::vector<int> order{deg3a};
            int prev = -1, cur = deg3a;
            while (true) {
                Mask nb = adj[static_cast<std::size_t>(cur)] & s;
                if (cur == deg3a || cur == deg3b) nb &= ~(Mask{1} << (cur == deg3a ? deg3b : deg3a));
                if (prev >= 0) nb &= ~(Mask{1} << prev);
                if (nb == 0) break;
                int next = std::countr_zero(nb);
                if (next == deg3a) break;
                order.push_back(next);
                prev = cur;
                cur = next;
                if (static_cast<int>(order.size()) > size) break;
            }
            if (static_cast<int>(order.size()) != size) continue;
            UnichordWitness w;
            for (int v : order) w.cycle.push_back(g.id(v));
            w.chord = {g.id(deg3a), g.id(deg3b)};
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Smallest cycle of length >= 5 with a unique chord, if any.
inline std::optional<UnichordWitness> find_long_unichord(const Graph& g, const OracleBounds& b = default_oracle_bounds()) {
    return detail::find_unichord_min(g, 5, std::min(b.unichord_max_n, 63), "find_long_unichord");
}

/// Smallest cycle of length >= 4 with a unique chord, if any.
inline std::optional<UnichordWitness> find_unichord(const Graph& g, const OracleBounds& b = default_oracle_bounds()) {
    return detail::find_unichord_min(g, 4, std::min(b.unichord_max_n, 63), "find_unichord");
}

/// All maximal cliques, each sorted, listed in lexicographic order.
inline std::vector<VertexSet> maximal_cliques(const Graph& g, const OracleBounds& b = default_oracle_bounds()) {
    detail::require_order(g, b.clique_max_n, "maximal_cliques");
    std::vector<VertexSet> out;
    detail::for_each_maximal_clique(g, [&](const std::vector<int>& c) {
        out.push_back(g.to_ids(c));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline int clique_number_exact(const Graph& g, const OracleBounds& b = default_oracle_bounds()) {
    detail::require_order(g, b.clique_max_n, "clique_number_exact");
    return detail::max_clique_size(g);
}

struct ExactChromatic {
    int chi = 0;
    std::vector<std::pair<VertexId, int>> coloring;  ///< (vertex, color), by vertex
};

inline ExactChromatic chromatic_number_exact(const Graph& g, const OracleBounds& b = default_oracle_bounds()) {
    detail::require_order(g, b.chromatic_max_n, "chromatic_number_exact");
    auto deadline = std::chrono::steady_clock::now() + b.chromatic_time_limit;
    auto col = detail::exact_coloring(g, detail::max_clique_size(g), deadline);
    ExactChromatic out;
    out.chi = detail::palette_size(col);
    for (int i = 0; i < g.order(); ++i) out.coloring.emplace_back(g.id(i), col[static_cast<std::size_t>(i)]);
    return out;
}

namespace detail {

// chi and omega for every subset of a graph on at most 20 vertices.
inline bool perfect_by_tables(const std::vector<Mask>& adj, int n) {
    const std::size_t total = std::size_t{1} << n;
    std::vector<std::uint8_t> omega(total, 0), chi(total, 0), indep(total, 0);
    indep[0] = 1;
    for (std::size_t s = 1; s < total; ++s) {
        int v = std::countr_zero(s);
        Mask rest = s & (s - 1);
        indep[s] = indep[rest] && !(adj[static_cast<std::size_t>(v)] & rest);
        omega[s] = std::max<std::uint8_t>(omega[rest], static_cast<std::uint8_t>(1 + omega[rest & adj[static_cast<std::size_t>(v)]]));
        // chi: the class of the lowest vertex is some independent I containing it.
        std::uint8_t best = 255;
        Mask low = s & (~s + 1);
        for (Mask rem = rest;; rem = (rem - 1) & rest) {
            Mask i = rem | low;
            if (indep[i]) best = std::min<std::uint8_t>(best, static_cast<std::uint8_t>(1 + chi[s & ~i]));
            if (rem == 0) break;
        }
        chi[s] = best;
        if (chi[s] != omega[s]) return false;
    }
    return true;
}

}  // namespace detail

/// chi(H) == omega(H) for every induced subgraph H.
inline bool is_perfect_small(const Graph& g, const OracleBounds& b = default_oracle_bounds()) {
    detail::require_order(g, std::min(b.perfect_max_n, 20), "is_perfect_small");
    return detail::perfect_by_tables(detail::adjacency_masks(g), g.order());
}

struct SplitterCheck {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

/// The four splitter conditions for H in (G, K_in, K_plus).
inline SplitterCheck verify_splitter(const Graph& g, const Constraint& c, const VertexSet& h) {
    if (auto why = constraint_violation(g, c)) throw PreconditionError("verify_splitter: invalid constraint: " + *why);
    for (VertexId v : h)
        if (!g.has_vertex(v)) return {false, "H has unknown vertex " + std::to_string(v)};
    if (!is_subset(c.k_in, h)) return {false, "H does not contain K_in"};
    if (intersects(h, c.k_plus)) return {false, "H meets K_plus"};
    if (!c.k_in.empty())
        for (VertexId v : h)
            if (is_complete_to(g, v, c.k_in)) return {false, "H contains K_in-complete vertex " + std::to_string(v)};
    // A clique avoiding H is maximal in G iff it is maximal in G - H and has
    // no common neighbor in H.
    Graph rest = remove_vertices(g, h);
    auto nb = detail::neighbor_bits(g);
    SplitterCheck out;
    detail::for_each_maximal_clique(rest, [&](const std::vector<int>& q) {
        detail::Bits common(static_cast<std::size_t>(g.order()));
        common.set();
        VertexSet ids = rest.to_ids(q);
        for (VertexId v : ids) common &= nb[static_cast<std::size_t>(g.index(v))];
        if (common.any()) return true;
        if (ids == c.k_plus) return true;
        std::string list;
        for (VertexId v : ids) list += (list.empty() ? "" : ",") + std::to_string(v);
        out = {false, "maximal clique {" + list + "} misses H"};
        return false;
    });
    return out;
}

/// Smallest (by size, then lexicographically by mask) splitter H; when
/// `require_perfect_with_kplus` is set, G[H u K_plus] must also be perfect.
inline std::optional<VertexSet> exhaustive_splitter_search(const Graph& g, const Constraint& c, bool require_perfect_with_kplus,
                                                           const OracleBounds& b = default_oracle_bounds()) {
    detail::require_order(g, std::min(b.splitter_search_max_n, 20), "exhaustive_splitter_search");
    if (auto why = constraint_violation(g, c)) throw PreconditionError("exhaustive_splitter_search: invalid constraint: " + *why);
    using detail::Mask;
    const int n = g.order();
    const auto adj = detail::adjacency_masks(g);
    auto to_mask = [&](const VertexSet& s) {
        Mask m = 0;
        for (VertexId v : s) m |= Mask{1} << g.index(v);
        return m;
    };
    const Mask kin = to_mask(c.k_in), kplus = to_mask(c.k_plus);
    Mask forbidden = kplus;
    if (kin)
        for (int v = 0; v < n; ++v)
            if ((adj[static_cast<std::size_t>(v)] & kin) == kin) forbidden |= Mask{1} << v;
    std::vector<Mask> cliques;
    detail::for_each_maximal_clique(g, [&](const std::vector<int>& q) {
        Mask m = 0;
        for (int v : q) m |= Mask{1} << v;
        if (m != kplus) cliques.push_back(m);
        return true;
    });
    const Mask full = (Mask{1} << n) - 1;
    std::vector<Mask> order;
    for (Mask s = 0; s <= full; ++s)
        if ((s & kin) == kin && !(s & forbidden)) order.push_back(s);
    std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
    for (Mask s : order) {
        bool meets = std::all_of(cliques.begin(), cliques.end(), [&](Mask q) { return (q & s) != 0; });
        if (!meets) continue;
        if (require_perfect_with_kplus) {
            Mask u = s | kplus;
            std::vector<int> keep;
            for (int v = 0; v < n; ++v)
                if (u >> v & 1) keep.push_back(v);
            Graph sub = g.induced_local(keep);
            if (!detail::perfect_by_tables(detail::adjacency_masks(sub), sub.order())) continue;
        }
        std::vector<int> local;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) local.push_back(v);
        return g.to_ids(local);
    }
    return std::nullopt;
}

}  // namespace luf
