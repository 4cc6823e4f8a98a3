#pragma once

// Splitters: base-case procedures, the combination rules for every
// decomposition, and the dispatcher that computes a splitter of a
// long-unichord-free graph.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "luf/basics.hpp"
#include "luf/constraint.hpp"
#include "luf/decomp.hpp"
#include "luf/error.hpp"
#include "luf/oracle.hpp"
#include "luf/petersen.hpp"

namespace luf {

/// f_0(0) = 0, f_0(x) = 1 for x >= 1, f_k(x) = sum_{i=0..x} f_{k-1}(i).
inline std::uint64_t f_k(int k, int x) {
    if (k < 0 || x < 0) throw PreconditionError("f_k: negative argument");
    std::vector<std::uint64_t> row(static_cast<std::size_t>(x) + 1);
    for (int i = 0; i <= x; ++i) row[static_cast<std::size_t>(i)] = i == 0 ? 0 : 1;
    for (int level = 1; level <= k; ++level) {
        std::uint64_t sum = 0;
        for (auto& v : row) v = sum += v;
    }
    return row[static_cast<std::size_t>(x)];
}

/// Vertices outside K_plus that are not complete to K_in.
inline VertexSet trivial_splitter(const Graph& g, const Constraint& c) {
    if (auto why = constraint_violation(g, c)) throw PreconditionError("trivial_splitter: " + *why);
    VertexSet h;
    for (VertexId v : g.ids())
        if (!contains(c.k_plus, v) && (c.k_in.empty() || !is_complete_to(g, v, c.k_in))) h.push_back(v);
    return h;
}

namespace detail {

inline bool is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::vector<int> q{s};
        for (std::size_t k = 0; k < q.size(); ++k)
            for (int y : g.neighbors(q[k])) {
                auto& sy = side[static_cast<std::size_t>(y)];
                if (sy < 0) {
                    sy = 1 - side[static_cast<std::size_t>(q[k])];
                    q.push_back(y);
                } else if (sy == side[static_cast<std::size_t>(q[k])]) {
                    return false;
                }
            }
    }
    return true;
}

inline VertexSet complete_to(const Graph& g, const VertexSet& k) {
    VertexSet out;
    if (k.empty()) return out;
    for (VertexId v : g.ids())
        if (is_complete_to(g, v, k)) out.push_back(v);
    return out;
}

}  // namespace detail

/// Splitter H = G - (X u K_plus u {v}) of a connected, triangle-free,
/// non-bipartite graph, where X is the set of K_in-complete vertices and v
/// has no neighbor in K_plus u X. Then |H u K_plus| < |V(G)|.
inline VertexSet triangle_free_splitter(const Graph& g, const Constraint& c) {
    if (auto why = constraint_violation(g, c)) throw PreconditionError("triangle_free_splitter: " + *why);
    if (!is_connected(g) || detail::has_triangle(g) || detail::is_bipartite(g))
        throw PreconditionError("triangle_free_splitter: graph must be connected, triangle-free and non-bipartite");
    const VertexSet x = detail::complete_to(g, c.k_in);
    const VertexSet blocked = set_union(x, c.k_plus);
    for (VertexId v : g.ids()) {
        if (contains(c.k_in, v) || contains(c.k_plus, v)) continue;
        bool ok = true;
        for (VertexId w : blocked)
            if (g.adjacent_ids(v, w)) ok = false;
        if (ok) return set_difference(g.ids(), set_with(blocked, v));
    }
    throw InternalError("triangle_free_splitter: no admissible vertex");
}

/// Which peeling level a splitter is computed for. At level 3 the splitter
/// H must make G[H u K_plus] have Property Q_2; at level 2 it must be perfect.
struct SplitterOptions {
    int level = 3;
    bool checked = false;
};

struct SplitterStats {
    std::size_t produced = 0;
    std::size_t verified = 0;
    std::size_t petersen = 0;
    std::size_t petersen_searched = 0;
    std::map<std::string, std::size_t> cases;  ///< combination rule -> uses
};

namespace detail {

inline void tally(SplitterStats* stats, const char* rule) {
    if (stats) ++stats->cases[rule];
}

}  // namespace detail

using SplitterProvider = std::function<VertexSet(const Graph&, const Constraint&)>;

/// Disjoint union: the constrained component gets the constraint, every
/// other component gets (empty, empty).
inline VertexSet combine_components(const Graph& g, const Constraint& c, const SplitterProvider& child, SplitterStats* stats = nullptr) {
    detail::tally(stats, "components");
    VertexSet h;
    const VertexSet q = set_union(c.k_in, c.k_plus);
    for (const VertexSet& comp : components(g)) {
        bool owns = !q.empty() && contains(comp, q.front());
        Constraint ci = owns ? c : Constraint{};
        h = set_union(h, child(induced_subgraph(g, comp), ci));
    }
    return h;
}

/// Gluing along a clique K (a cutvertex here): the side holding the
/// constraint is solved first, the other side is constrained by what the
/// first splitter took from K.
inline VertexSet combine_clique_cutset(const Graph& g, Split s, const Constraint& c, const SplitterProvider& child, SplitterStats* stats = nullptr) {
    const VertexSet q = set_union(c.k_in, c.k_plus);
    if (!is_subset(q, set_union(s.x1, s.k))) s = s.swapped();
    if (!is_subset(q, set_union(s.x1, s.k))) throw PreconditionError("combine_clique_cutset: constraint meets both sides");
    Blocks b = blocks(g, s);
    VertexSet h1 = child(b.g1, c);
    VertexSet in_k = set_intersection(h1, s.k);
    detail::tally(stats, in_k.empty() ? "cutvertex-2" : "cutvertex-1");
    Constraint c2 = in_k.empty() ? Constraint{{}, s.k} : Constraint{in_k, set_intersection(c.k_plus, s.k)};
    return set_union(h1, child(*b.g2, c2));
}

/// Adding a universal vertex v.
inline VertexSet combine_universal(const Graph& g, VertexId v, const Constraint& c, const SplitterProvider& child, SplitterStats* stats = nullptr) {
    if (g.degree(g.index(v)) != g.order() - 1) throw PreconditionError("combine_universal: vertex is not universal");
    if (contains(c.k_in, v)) {
        detail::tally(stats, "universal-1");
        return c.k_in;
    }
    // With K_in empty and v outside K_plus, the clique K_plus + v may be
    // maximal; {v} meets every maximal clique and avoids K_plus.
    if (c.k_in.empty() && !contains(c.k_plus, v)) {
        detail::tally(stats, "universal-single");
        return {v};
    }
    detail::tally(stats, "universal-2");
    return child(remove_vertices(g, {v}), {c.k_in, set_minus(c.k_plus, v)});
}

inline VertexSet combine_amalgam(const Graph& g, Split s, const Constraint& c, const SplitterProvider& child, SplitterStats* stats = nullptr) {
    const VertexSet q = set_union(c.k_in, c.k_plus);
    const bool fits1 = is_subset(q, set_union(s.x1, s.k)), fits2 = is_subset(q, set_union(s.x2, s.k));
    if (!fits1 && !fits2) {
        const VertexSet& k = s.k;
        if (!intersects(c.k_in, k) && !c.k_in.empty() && !intersects(c.k_in, s.a1)) s = s.swapped();
        Blocks b = blocks(g, s);
        const VertexId u2 = b.marker_in_g1, u1 = b.marker_in_g2;
        const VertexSet k1 = set_union(k, s.a1), k2 = set_union(k, s.a2);
        if (intersects(c.k_in, k)) {
            detail::tally(stats, "amalgam-1a");
            Constraint c1{set_intersection(c.k_in, k1), set_with(set_intersection(c.k_plus, k1), u2)};
            Constraint c2{set_intersection(c.k_in, k2), set_with(set_intersection(c.k_plus, k2), u1)};
            return set_union(child(b.g1, c1), child(*b.g2, c2));
        }
        if (!c.k_in.empty()) {
            detail::tally(stats, "amalgam-1b");
            Constraint c1{set_intersection(c.k_in, s.a1), set_with(set_intersection(c.k_plus, k1), u2)};
            Constraint c2{set_with(set_intersection(c.k_in, s.a2), u1), set_intersection(c.k_plus, k2)};
            return set_union(child(b.g1, c1), set_minus(child(*b.g2, c2), u1));
        }
        // 1c: a vertex of A1 u A2 u K outside K_plus and complete to it turns
        // the constraint into case 1a or 1b.
        for (VertexId v : set_difference(set_union(k1, s.a2), c.k_plus))
            if (is_complete_to(g, v, c.k_plus)) return combine_amalgam(g, s, {{v}, c.k_plus}, child, stats);
        detail::tally(stats, "amalgam-1c");
        Constraint c1{{}, set_with(set_intersection(c.k_plus, k1), u2)};
        Constraint c2{{}, set_with(set_intersection(c.k_plus, k2), u1)};
        return set_union(child(b.g1, c1), child(*b.g2, c2));
    }
    if (!fits1) s = s.swapped();
    Blocks b = blocks(g, s);
    const VertexId u2 = b.marker_in_g1, u1 = b.marker_in_g2;
    VertexSet h1 = child(b.g1, c);
    VertexSet in_k = set_intersection(h1, s.k);
    const VertexSet kplus_k = set_intersection(c.k_plus, s.k);
    if (!in_k.empty()) {
        detail::tally(stats, "amalgam-2a");
        return set_union(set_minus(h1, u2), child(*b.g2, {in_k, kplus_k}));
    }
    if (!contains(h1, u2)) {
        detail::tally(stats, "amalgam-2b");
        return set_union(h1, set_minus(child(*b.g2, {{u1}, kplus_k}), u1));
    }
    detail::tally(stats, "amalgam-2c");
    return set_union(set_minus(h1, u2), child(*b.g2, {{s.a2.front()}, set_with(kplus_k, u1)}));
}

inline VertexSet combine_proper_2cutset(const Graph& g, Split s, const Constraint& c, const SplitterProvider& child, SplitterStats* stats = nullptr) {
    const VertexSet ab = make_set({s.a, s.b});
    const VertexSet q = set_union(c.k_in, c.k_plus);
    if (!is_subset(q, set_union(s.x1, ab))) s = s.swapped();
    if (!is_subset(q, set_union(s.x1, ab))) throw PreconditionError("combine_proper_2cutset: constraint meets both sides");
    Blocks b = blocks(g, s);
    const VertexId x2 = b.marker_in_g1, x1 = b.marker_in_g2;
    VertexSet h1 = child(b.g1, c);
    const VertexSet h1_rest = set_minus(h1, x2);
    const VertexSet plus_ab = set_intersection(c.k_plus, ab);
    if (!plus_ab.empty()) {
        VertexId p = plus_ab.front(), other = p == s.a ? s.b : s.a;
        if (contains(h1, other)) {
            detail::tally(stats, "2cutset-1-both");
            return set_union(h1_rest, child(*b.g2, {{}, make_set({p, x1})}));
        }
        detail::tally(stats, "2cutset-1-one");
        return set_union(h1_rest, set_minus(child(*b.g2, {{x1}, {p}}), x1));
    }
    const VertexSet in_h1 = set_intersection(h1, ab);
    if (in_h1.empty()) {
        detail::tally(stats, "2cutset-2-none");
        return set_union(h1_rest, set_minus(child(*b.g2, {{x1}, {}}), x1));
    }
    if (in_h1.size() == 2) {
        detail::tally(stats, "2cutset-2-both");
        VertexSet kin_ab = set_intersection(c.k_in, ab);
        VertexId a2 = kin_ab.empty() ? s.a : kin_ab.front();
        return set_union(h1_rest, set_minus(child(*b.g2, {{a2}, {}}), a2));
    }
    detail::tally(stats, "2cutset-2-one");
    return set_union(h1_rest, set_minus(child(*b.g2, {{x1}, in_h1}), x1));
}

namespace detail {

class SplitterEngine {
public:
    SplitterEngine(const SplitterOptions& opt, SplitterStats* stats) : opt_(opt), stats_(stats) {}

    VertexSet operator()(const Graph& g, const Constraint& c) {
        VertexSet h = dispatch(g, c);
        if (stats_) ++stats_->produced;
        if (opt_.checked) {
            auto r = verify_splitter(g, c, h);
            if (!r) throw InternalError("splitter check failed on a " + std::to_string(g.order()) + "-vertex graph: " + r.reason);
            if (stats_) ++stats_->verified;
        }
        return h;
    }

private:
    VertexSet dispatch(const Graph& g, const Constraint& c) {
        if (auto why = constraint_violation(g, c)) throw PreconditionError("compute_splitter: " + *why);
        if (g.order() == 0) return {};
        SplitterProvider self = [this](const Graph& h, const Constraint& ch) { return (*this)(h, ch); };
        if (!is_connected(g)) return combine_components(g, c, self, stats_);
        if (is_chordal(g) || is_bipartite(g)) return trivial_splitter(g, c);
        if (g.order() <= 10 && !has_triangle(g))
            if (auto e = embed_in_named(g, NamedTarget::petersen)) return petersen_piece(g, *e, c);
        VertexSet uni = find_universal_vertices(g);
        if (!uni.empty()) return combine_universal(g, uni.front(), c, self, stats_);
        if (auto s = find_cutvertex(g)) return combine_clique_cutset(g, *s, c, self, stats_);
        if (auto s = find_amalgam(g)) return combine_amalgam(g, *s, c, self, stats_);
        if (!is_diamond_free(g))
            if (auto s = find_proper_2cutset(g)) return combine_proper_2cutset(g, *s, c, self, stats_);
        throw NotInClass("compute_splitter: no decomposition applies to a " + std::to_string(g.order()) + "-vertex node");
    }

    VertexSet petersen_piece(const Graph& g, const Embedding& e, const Constraint& c) {
        if (stats_) ++stats_->petersen;
        if (opt_.level <= 2) {
            // A perfect G[H u K_plus] is required; these graphs are small
            // enough for exhaustive search.
            if (stats_) ++stats_->petersen_searched;
            if (auto h = exhaustive_splitter_search(g, c, true)) return *h;
        }
        VertexSet h = petersen_splitter(g, e, c);
        if (!verify_splitter(g, c, h)) h = triangle_free_splitter(g, c);
        return h;
    }

    SplitterOptions opt_;
    SplitterStats* stats_;
};

}  // namespace detail

/// A splitter of the long-unichord-free graph g for constraint c. Base
/// classes first (chordal or bipartite: trivial splitter; induced subgraph
/// of Petersen: Petersen splitter), then universal vertex, cutvertex,
/// amalgam and, at diamond-free nodes, proper 2-cutset.
inline VertexSet compute_splitter(const Graph& g, const Constraint& c, const SplitterOptions& opt = {},
                                  SplitterStats* stats = nullptr) {
    detail::SplitterEngine engine(opt, stats);
    return engine(g, c);
}

}  // namespace luf
