#pragma once

// Coloring long-unichord-free graphs with at most f_3(omega) colors by
// peeling splitters on three levels.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "luf/basics.hpp"
#include "luf/detail/cliques.hpp"
#include "luf/detail/exact_coloring.hpp"
#include "luf/oracle.hpp"
#include "luf/recognizer.hpp"
#include "luf/splitter.hpp"

namespace luf {

namespace detail {

// Largest clique of a chordal graph: a vertex together with its later
// neighbors in a perfect elimination ordering.
inline int chordal_clique_number(const Graph& g, const std::vector<VertexId>& peo) {
    std::vector<int> rank(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < peo.size(); ++i) rank[static_cast<std::size_t>(g.index(peo[i]))] = static_cast<int>(i);
    int best = g.order() > 0 ? 1 : 0;
    for (int v = 0; v < g.order(); ++v) {
        int later = 0;
        for (int w : g.neighbors(v))
            if (rank[static_cast<std::size_t>(w)] > rank[static_cast<std::size_t>(v)]) ++later;
        best = std::max(best, later + 1);
    }
    return best;
}

// In a diamond-free graph every edge lies in exactly one maximal clique,
// namely the edge plus the common neighbors of its ends.
inline int diamond_free_clique_number(const Graph& g) {
    int best = g.order() > 0 ? 1 : 0;
    for (auto [u, v] : g.edges()) {
        VertexSet common = set_intersection(g.neighbor_ids(u), g.neighbor_ids(v));
        best = std::max(best, 2 + static_cast<int>(common.size()));
    }
    return best;
}

inline int leaf_clique_number(const TreeNode& leaf) {
    const Graph& g = leaf.graph;
    if (*leaf.leaf_class == LeafClass::chordal) return chordal_clique_number(g, *is_chordal(g));
    switch (classify_unichord_free_base(g).tag) {
        case BasicTag::clique: return g.order();
        case BasicTag::sparse_bipartite:
        case BasicTag::petersen_sub:
        case BasicTag::heawood_sub: return g.edge_count() > 0 ? 2 : 1;
        default: return diamond_free_clique_number(g);
    }
}

}  // namespace detail

/// omega(G), evaluated bottom-up over the decomposition tree. Throws
/// NotInClass if the tree has a non-basic leaf.
inline int clique_number_via_tree(const Graph& g) {
    int best = 0;
    for (const VertexSet& comp : components(g)) {
        DecompTree t = build_tree(induced_subgraph(g, comp));
        std::vector<int> w(t.nodes.size(), 0);
        // Children always come after their parent.
        for (std::size_t i = t.nodes.size(); i-- > 0;) {
            const TreeNode& n = t.nodes[i];
            auto child = [&](std::size_t k) { return w[static_cast<std::size_t>(n.children[k])]; };
            switch (n.rule) {
                case NodeRule::leaf:
                    if (n.leaf_class == LeafClass::non_basic) throw NotInClass("clique_number_via_tree: non-basic leaf");
                    w[i] = detail::leaf_clique_number(n);
                    break;
                case NodeRule::components:
                case NodeRule::cutvertex:
                    for (std::size_t k = 0; k < n.children.size(); ++k) w[i] = std::max(w[i], child(k));
                    break;
                case NodeRule::universal_removal:
                    w[i] = static_cast<int>(n.split->universal.size()) + child(0);
                    break;
                case NodeRule::amalgam: {
                    const Split& s = *n.split;
                    int cross = static_cast<int>(s.k.size()) + clique_number_via_tree(induced_subgraph(n.graph, s.a1)) +
                                clique_number_via_tree(induced_subgraph(n.graph, s.a2));
                    w[i] = std::max({child(0), child(1), cross});
                    break;
                }
            }
        }
        best = std::max(best, w[0]);
    }
    return best;
}

struct ColorOptions {
    bool checked = false;           ///< verify every splitter
    bool anchored_peels = true;     ///< peel with K_in = {v}, v in a largest clique
    int peel_check_max_n = 0;       ///< oracle check of omega drops on remainders up to this order
    bool greedy_level1 = false;     ///< DSATUR instead of branch and bound when the time limit hits
    std::chrono::milliseconds level1_time_limit{10000};
};

/// One piece of the peeling. Level 3 is the whole graph; a level-k piece is
/// either colored directly or split into level-(k-1) pieces.
struct PieceTrace {
    int level = 0;
    VertexSet vertices;
    int omega = 0;
    int first_color = 0;
    int colors = 0;
    std::string method;  ///< "peel", "peo", "bipartite", "exact", "greedy"
    std::vector<PieceTrace> pieces;
};

struct ColoringStats {
    SplitterStats splitters;
    std::size_t peels = 0;
    std::size_t peel_checks = 0;
    std::size_t peel_check_failures = 0;
    std::size_t direct_pieces = 0;
};

struct Coloring {
    std::map<VertexId, int> assignment;
    int palette_size = 0;
    int omega = 0;
    std::uint64_t bound = 0;
    PieceTrace trace;
    ColoringStats stats;
};

/// First edge whose ends share a color, or a vertex without a color.
inline std::optional<std::string> coloring_violation(const Graph& g, const std::map<VertexId, int>& a) {
    for (VertexId v : g.ids())
        if (!a.count(v)) return "vertex " + std::to_string(v) + " has no color";
    for (auto [u, v] : g.edges())
        if (a.at(u) == a.at(v)) return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is monochromatic";
    return std::nullopt;
}

namespace detail {

class Peeler {
public:
    Peeler(const ColorOptions& opt, Coloring& out) : opt_(opt), out_(out) {}

    PieceTrace color(const Graph& g, int level, int first) {
        PieceTrace t;
        t.level = level;
        t.vertices = g.ids();
        t.first_color = first;
        t.omega = max_clique_size(g);
        if (g.order() == 0) return t;
        if (auto peo = is_chordal(g)) {
            direct(g, t, greedy_on(g, *peo), "peo");
        } else if (is_bipartite(g)) {
            direct(g, t, two_coloring(g), "bipartite");
        } else if (level == 1) {
            exact(g, t);
        } else {
            peel(g, level, t);
        }
        return t;
    }

private:
    void peel(const Graph& g, int level, PieceTrace& t) {
        t.method = "peel";
        Graph rem = g;
        int used = 0, rounds = 0;
        while (rem.order() > 0) {
            if (++rounds > t.omega)
                throw InternalError("peeling at level " + std::to_string(level) + " did not finish within omega = " +
                                    std::to_string(t.omega) + " rounds");
            Constraint c;
            if (opt_.anchored_peels) c.k_in = {largest_clique_vertex(rem)};
            VertexSet h = compute_splitter(rem, c, {level, opt_.checked}, &out_.stats.splitters);
            Graph next = remove_vertices(rem, h);
            ++out_.stats.peels;
            if (rem.order() <= opt_.peel_check_max_n) {
                ++out_.stats.peel_checks;
                if (clique_number_exact(next) != clique_number_exact(rem) - 1) ++out_.stats.peel_check_failures;
            }
            PieceTrace sub = color(induced_subgraph(rem, h), level - 1, t.first_color + used);
            used += sub.colors;
            t.pieces.push_back(std::move(sub));
            rem = std::move(next);
        }
        t.colors = used;
    }

    // A splitter for ({v}, {}) holds v and no neighbor of v, so it meets a
    // largest clique through v only in v: the clique number drops by one.
    static VertexId largest_clique_vertex(const Graph& g) {
        std::vector<int> best;
        for_each_maximal_clique(g, [&](const std::vector<int>& q) {
            if (q.size() > best.size()) best = q;
            return true;
        });
        return g.id(best.front());
    }

    void exact(const Graph& g, PieceTrace& t) {
        auto deadline = std::chrono::steady_clock::now() + opt_.level1_time_limit;
        LocalColoring c;
        try {
            c = exact_coloring(g, t.omega, deadline);
            t.method = "exact";
        } catch (const BoundExceeded&) {
            if (!opt_.greedy_level1)
                throw BoundExceeded("level-1 piece on " + std::to_string(g.order()) + " vertices exceeded the time limit");
            c = dsatur_greedy(g);
            t.method = "greedy";
        }
        direct(g, t, std::move(c), std::string(t.method));
    }

    void direct(const Graph& g, PieceTrace& t, LocalColoring c, const std::string& method) {
        ++out_.stats.direct_pieces;
        t.method = method;
        t.colors = palette_size(c);
        for (int i = 0; i < g.order(); ++i) out_.assignment[g.id(i)] = t.first_color + c[static_cast<std::size_t>(i)];
    }

    static LocalColoring greedy_on(const Graph& g, const std::vector<VertexId>& peo) {
        LocalColoring c(static_cast<std::size_t>(g.order()), -1);
        // Reverse elimination order: earlier-colored neighbors form a clique.
        for (auto it = peo.rbegin(); it != peo.rend(); ++it) {
            int v = g.index(*it);
            std::vector<char> taken(static_cast<std::size_t>(g.degree(v)) + 1, 0);
            for (int w : g.neighbors(v)) {
                int cw = c[static_cast<std::size_t>(w)];
                if (cw >= 0 && cw < static_cast<int>(taken.size())) taken[static_cast<std::size_t>(cw)] = 1;
            }
            int k = 0;
            while (taken[static_cast<std::size_t>(k)]) ++k;
            c[static_cast<std::size_t>(v)] = k;
        }
        return c;
    }

    static LocalColoring two_coloring(const Graph& g) {
        LocalColoring c(static_cast<std::size_t>(g.order()), -1);
        for (int s = 0; s < g.order(); ++s) {
            if (c[static_cast<std::size_t>(s)] >= 0) continue;
            c[static_cast<std::size_t>(s)] = 0;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : g.neighbors(v))
                    if (c[static_cast<std::size_t>(w)] < 0) {
                        c[static_cast<std::size_t>(w)] = 1 - c[static_cast<std::size_t>(v)];
                        stack.push_back(w);
                    }
            }
        }
        return c;
    }

    const ColorOptions& opt_;
    Coloring& out_;
};

}  // namespace detail

/// Colors a long-unichord-free graph with at most f_3(omega) colors. Runs
/// the recognizer first and throws NotInClass for other graphs.
inline Coloring color(const Graph& g, const ColorOptions& opt = {}) {
    Verdict v = recognize(g);
    if (!v.long_unichord_free) throw NotInClass("color: graph is not long-unichord-free");
    Coloring out;
    out.omega = clique_number_via_tree(g);
    out.bound = f_k(3, out.omega);
    detail::Peeler peeler(opt, out);
    out.trace = peeler.color(g, 3, 0);
    if (auto why = coloring_violation(g, out.assignment)) throw InternalError("color: improper coloring: " + *why);
    std::vector<int> used;
    for (auto [x, c] : out.assignment) used.push_back(c);
    std::sort(used.begin(), used.end());
    out.palette_size = static_cast<int>(std::unique(used.begin(), used.end()) - used.begin());
    if (static_cast<std::uint64_t>(out.palette_size) > out.bound)
        throw InternalError("color: " + std::to_string(out.palette_size) + " colors exceed f_3(" + std::to_string(out.omega) +
                            ") = " + std::to_string(out.bound));
    return out;
}

inline nlohmann::json to_json(const PieceTrace& t) {
    nlohmann::json j{{"level", t.level}, {"n", t.vertices.size()}, {"omega", t.omega},
                     {"first_color", t.first_color}, {"colors", t.colors}, {"method", t.method}};
    if (t.level < 3) j["vertices"] = t.vertices;
    if (!t.pieces.empty()) {
        nlohmann::json p = nlohmann::json::array();
        for (const PieceTrace& s : t.pieces) p.push_back(to_json(s));
        j["pieces"] = std::move(p);
    }
    return j;
}

inline nlohmann::json to_json(const Coloring& c) {
    nlohmann::json a = nlohmann::json::object();
    for (auto [v, k] : c.assignment) a[std::to_string(v)] = k;
    nlohmann::json cases = nlohmann::json::object();
    for (const auto& [rule, count] : c.stats.splitters.cases) cases[rule] = count;
    return {{"colors", c.palette_size},
            {"omega", c.omega},
            {"bound", c.bound},
            {"assignment", std::move(a)},
            {"trace", to_json(c.trace)},
            {"stats", {{"peels", c.stats.peels}, {"splitters", c.stats.splitters.produced},
                       {"splitters_verified", c.stats.splitters.verified}, {"direct_pieces", c.stats.direct_pieces},
                       {"cases", std::move(cases)}}}};
}

/// Reads the "assignment" object of a coloring document.
inline std::map<VertexId, int> assignment_from_json(const nlohmann::json& j) {
    const nlohmann::json& a = j.contains("assignment") ? j.at("assignment") : j;
    if (!a.is_object()) throw PreconditionError("coloring: \"assignment\" must be an object");
    std::map<VertexId, int> out;
    for (const auto& [key, value] : a.items()) {
        if (!value.is_number_integer()) throw PreconditionError("coloring: color of vertex " + key + " is not an integer");
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(key, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != key.size()) throw PreconditionError("coloring: bad vertex key '" + key + "'");
        out[static_cast<VertexId>(v)] = value.get<int>();
    }
    return out;
}

}  // namespace luf
