#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "luf/graph.hpp"

namespace luf {

enum class SplitKind { universal_set, cutvertex, amalgam, proper_2cutset };

inline const char* to_string(SplitKind k) {
    switch (k) {
        case SplitKind::universal_set: return "universal-set";
        case SplitKind::cutvertex: return "cutvertex";
        case SplitKind::amalgam: return "amalgam";
        case SplitKind::proper_2cutset: return "proper-2cutset";
    }
    return "?";
}

/// One decomposition found in a graph, with its witness sets.
///
///   universal-set:  `universal` holds X.
///   cutvertex:      `k` = {v}; X1, X2 are the two sides.
///   amalgam:        (X1, X2, A1, A2, K); K empty means a 1-join.
///   proper-2cutset: (X1, X2, a, b).
struct Split {
    SplitKind kind = SplitKind::cutvertex;
    VertexSet universal;
    VertexSet x1, x2, a1, a2, k;
    VertexId a = -1;
    VertexId b = -1;

    VertexId cutvertex() const { return k.empty() ? -1 : k.front(); }

    /// Exchanges the roles of the two sides.
    Split swapped() const {
        Split s = *this;
        std::swap(s.x1, s.x2);
        std::swap(s.a1, s.a2);
        return s;
    }

    friend bool operator==(const Split&, const Split&) = default;
};

namespace detail {

inline bool has_ab_path(const Graph& g, const VertexSet& side, VertexId a, VertexId b) {
    VertexSet allowed = set_with(set_with(side, a), b);
    Graph h = induced_subgraph(g, allowed);
    std::vector<int> label;
    component_labels(h, label);
    return label[static_cast<std::size_t>(h.index(a))] == label[static_cast<std::size_t>(h.index(b))];
}

inline bool is_partition(const Graph& g, std::initializer_list<const VertexSet*> parts) {
    VertexSet all;
    std::size_t total = 0;
    for (const VertexSet* p : parts) {
        total += p->size();
        all = set_union(all, *p);
    }
    return total == all.size() && all == g.ids();
}

}  // namespace detail

/// Checks every defining condition of the split kind. Returns the first
/// failed clause, or nullopt when `s` is a valid split of `g`.
inline std::optional<std::string> split_violation(const Graph& g, const Split& s) {
    auto in_graph = [&](const VertexSet& x) {
        for (VertexId v : x)
            if (!g.has_vertex(v)) return false;
        return true;
    };
    switch (s.kind) {
        case SplitKind::universal_set: {
            if (s.universal.empty()) return "universal set is empty";
            if (!in_graph(s.universal)) return "universal set has unknown vertex";
            for (VertexId x : s.universal)
                if (g.degree(g.index(x)) != g.order() - 1) return "vertex " + std::to_string(x) + " is not universal";
            return std::nullopt;
        }
        case SplitKind::cutvertex: {
            if (s.k.size() != 1) return "cutvertex split needs exactly one cut vertex";
            if (!in_graph(s.x1) || !in_graph(s.x2) || !in_graph(s.k)) return "unknown vertex";
            if (!detail::is_partition(g, {&s.x1, &s.x2, &s.k})) return "sides and cutvertex do not partition V";
            if (s.x1.empty() || s.x2.empty()) return "empty side";
            for (VertexId u : s.x1)
                for (VertexId v : g.neighbor_ids(u))
                    if (contains(s.x2, v)) return "edge between the sides";
            return std::nullopt;
        }
        case SplitKind::amalgam: {
            if (!in_graph(s.x1) || !in_graph(s.x2) || !in_graph(s.k)) return "unknown vertex";
            if (!detail::is_partition(g, {&s.x1, &s.x2, &s.k})) return "X1, X2, K do not partition V";
            if (s.x1.size() < 2 || s.x2.size() < 2) return "|X_i| < 2";
            if (s.a1.empty() || s.a2.empty()) return "empty A_i";
            if (!is_subset(s.a1, s.x1) || !is_subset(s.a2, s.x2)) return "A_i not inside X_i";
            if (!is_clique_set(g, s.k)) return "K is not a clique";
            for (VertexId c : s.k) {
                int ic = g.index(c);
                for (VertexId x : set_union(s.a1, s.a2))
                    if (!g.adjacent(ic, g.index(x))) return "K not complete to A1 u A2";
            }
            for (VertexId u : s.x1) {
                bool in_a1 = contains(s.a1, u);
                int iu = g.index(u);
                for (VertexId v : s.x2) {
                    bool want = in_a1 && contains(s.a2, v);
                    if (g.adjacent(iu, g.index(v)) != want)
                        return want ? "missing A1-A2 edge" : "extra X1-X2 edge";
                }
            }
            return std::nullopt;
        }
        case SplitKind::proper_2cutset: {
            if (!g.has_vertex(s.a) || !g.has_vertex(s.b) || s.a == s.b) return "bad cut pair";
            if (!in_graph(s.x1) || !in_graph(s.x2)) return "unknown vertex";
            VertexSet ab = make_set({s.a, s.b});
            if (!detail::is_partition(g, {&s.x1, &s.x2, &ab})) return "X1, X2, {a,b} do not partition V";
            if (g.adjacent_ids(s.a, s.b)) return "a and b are adjacent";
            if (s.x1.size() < 2 || s.x2.size() < 2) return "|X_i| < 2";
            for (VertexId u : s.x1)
                for (VertexId v : g.neighbor_ids(u))
                    if (contains(s.x2, v)) return "edge between X1 and X2";
            if (!detail::has_ab_path(g, s.x1, s.a, s.b)) return "no a-b path through X1";
            if (!detail::has_ab_path(g, s.x2, s.a, s.b)) return "no a-b path through X2";
            return std::nullopt;
        }
    }
    return "unknown split kind";
}

inline bool is_valid_split(const Graph& g, const Split& s) { return !split_violation(g, s).has_value(); }

inline nlohmann::json to_json(const Split& s) {
    nlohmann::json j;
    j["kind"] = to_string(s.kind);
    switch (s.kind) {
        case SplitKind::universal_set: j["X"] = s.universal; break;
        case SplitKind::cutvertex:
            j["v"] = s.cutvertex();
            j["X1"] = s.x1;
            j["X2"] = s.x2;
            break;
        case SplitKind::amalgam:
            j["X1"] = s.x1;
            j["X2"] = s.x2;
            j["A1"] = s.a1;
            j["A2"] = s.a2;
            j["K"] = s.k;
            break;
        case SplitKind::proper_2cutset:
            j["X1"] = s.x1;
            j["X2"] = s.x2;
            j["a"] = s.a;
            j["b"] = s.b;
            break;
    }
    return j;
}

}  // namespace luf
