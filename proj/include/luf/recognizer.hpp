#pragma once

// Decomposition trees and the long-unichord-free recognizer.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "luf/basics.hpp"
#include "luf/decomp.hpp"
#include "luf/oracle.hpp"

namespace luf {

enum class BasicKind { chordal, unichord_free };

inline const char* to_string(BasicKind k) { return k == BasicKind::chordal ? "chordal" : "unichord-free"; }

/// Chordal is tested first. Requires a connected graph.
inline std::optional<BasicKind> is_basic(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("is_basic: graph is disconnected");
    if (is_chordal(g)) return BasicKind::chordal;
    if (is_unichord_free(g)) return BasicKind::unichord_free;
    return std::nullopt;
}

enum class NodeRule { universal_removal, cutvertex, amalgam, components, leaf };

inline const char* to_string(NodeRule r) {
    switch (r) {
        case NodeRule::universal_removal: return "universal-removal";
        case NodeRule::cutvertex: return "cutvertex";
        case NodeRule::amalgam: return "amalgam";
        case NodeRule::components: return "components";
        case NodeRule::leaf: return "leaf";
    }
    return "?";
}

enum class LeafClass { chordal, unichord_free, non_basic };

inline const char* to_string(LeafClass c) {
    switch (c) {
        case LeafClass::chordal: return "chordal";
        case LeafClass::unichord_free: return "unichord-free";
        case LeafClass::non_basic: return "non-basic";
    }
    return "?";
}

struct TreeNode {
    Graph graph;
    NodeRule rule = NodeRule::leaf;
    std::optional<Split> split;
    std::vector<int> children;
    std::optional<LeafClass> leaf_class;
    int depth = 0;
    /// Marker vertices of this node's graph and the root vertex each stands
    /// for; with it the node graph is an induced subgraph of the root.
    std::map<VertexId, VertexId> realization;
};

struct TreeStats {
    std::size_t nodes = 0;
    std::size_t leaves = 0;
    int max_depth = 0;
    std::size_t chordal_leaves = 0;
    std::size_t unichord_free_leaves = 0;
    std::size_t non_basic_leaves = 0;
    std::size_t universal_nodes = 0;
    std::uint64_t potential = 0;        ///< f(root)
    std::size_t sum_violations = 0;     ///< nodes where f(G1) + f(G2) > f(G)
};

struct DecompTree {
    std::vector<TreeNode> nodes;  ///< nodes[0] is the root
    TreeStats stats;

    bool all_leaves_basic() const { return stats.non_basic_leaves == 0; }
    bool leaf_bound_holds() const { return stats.leaves <= stats.potential; }
};

/// Decomposition tree of a connected graph. At each node that is not basic:
/// remove all universal vertices if any; otherwise split at a cutvertex;
/// otherwise at an amalgam; otherwise the node is a non-basic leaf.
inline DecompTree build_tree(const Graph& g) {
    DecompTree t;
    t.nodes.push_back({g, NodeRule::leaf, std::nullopt, {}, std::nullopt, 0, {}});
    t.stats.potential = potential_f(g);
    std::vector<int> pending{0};
    auto add_child = [&](int parent, Graph child, std::map<VertexId, VertexId> real) {
        int idx = static_cast<int>(t.nodes.size());
        int depth = t.nodes[static_cast<std::size_t>(parent)].depth + 1;
        t.nodes.push_back({std::move(child), NodeRule::leaf, std::nullopt, {}, std::nullopt, depth, std::move(real)});
        t.nodes[static_cast<std::size_t>(parent)].children.push_back(idx);
        pending.push_back(idx);
    };
    while (!pending.empty()) {
        int id = pending.back();
        pending.pop_back();
        // Copy what we need: add_child may reallocate `t.nodes`.
        Graph h = t.nodes[static_cast<std::size_t>(id)].graph;
        auto real = t.nodes[static_cast<std::size_t>(id)].realization;
        auto realize = [&](VertexId v) {
            auto it = real.find(v);
            return it == real.end() ? v : it->second;
        };
        if (!is_connected(h)) {
            t.nodes[static_cast<std::size_t>(id)].rule = NodeRule::components;
            for (const VertexSet& c : components(h)) {
                std::map<VertexId, VertexId> r;
                for (VertexId v : c)
                    if (real.count(v)) r[v] = real[v];
                add_child(id, induced_subgraph(h, c), std::move(r));
            }
            continue;
        }
        if (auto basic = is_basic(h)) {
            t.nodes[static_cast<std::size_t>(id)].leaf_class =
                *basic == BasicKind::chordal ? LeafClass::chordal : LeafClass::unichord_free;
            continue;
        }
        VertexSet uni = find_universal_vertices(h);
        if (!uni.empty()) {
            auto& node = t.nodes[static_cast<std::size_t>(id)];
            node.rule = NodeRule::universal_removal;
            node.split = Split{SplitKind::universal_set, uni, {}, {}, {}, {}, {}, -1, -1};
            std::map<VertexId, VertexId> r;
            for (auto [m, v] : real)
                if (!contains(uni, m)) r[m] = v;
            add_child(id, remove_vertices(h, uni), std::move(r));
            continue;
        }
        std::optional<Split> s = find_cutvertex(h);
        NodeRule rule = NodeRule::cutvertex;
        if (!s) {
            s = find_amalgam(h);
            rule = NodeRule::amalgam;
        }
        if (!s) {
            t.nodes[static_cast<std::size_t>(id)].leaf_class = LeafClass::non_basic;
            continue;
        }
        Blocks b = blocks(h, *s);
        if (potential_f(b.g1) + potential_f(*b.g2) > potential_f(h)) ++t.stats.sum_violations;
        t.nodes[static_cast<std::size_t>(id)].rule = rule;
        t.nodes[static_cast<std::size_t>(id)].split = s;
        std::map<VertexId, VertexId> r1, r2;
        for (auto [m, v] : real) {
            if (b.g1.has_vertex(m)) r1[m] = v;
            if (b.g2->has_vertex(m)) r2[m] = v;
        }
        if (rule == NodeRule::amalgam) {
            // u2 in G1 stands for a vertex of A2, u1 in G2 for a vertex of A1.
            r1[b.marker_in_g1] = realize(s->a2.front());
            r2[b.marker_in_g2] = realize(s->a1.front());
        }
        add_child(id, std::move(b.g1), std::move(r1));
        add_child(id, std::move(*b.g2), std::move(r2));
    }
    for (const TreeNode& n : t.nodes) {
        ++t.stats.nodes;
        t.stats.max_depth = std::max(t.stats.max_depth, n.depth);
        if (n.rule == NodeRule::universal_removal) ++t.stats.universal_nodes;
        if (!n.leaf_class) continue;
        ++t.stats.leaves;
        switch (*n.leaf_class) {
            case LeafClass::chordal: ++t.stats.chordal_leaves; break;
            case LeafClass::unichord_free: ++t.stats.unichord_free_leaves; break;
            case LeafClass::non_basic: ++t.stats.non_basic_leaves; break;
        }
    }
    return t;
}

struct Verdict {
    bool long_unichord_free = true;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<DecompTree> trees;  ///< one per connected component
    TreeStats totals;
    std::optional<UnichordWitness> witness;
};

namespace detail {

inline std::optional<UnichordWitness> witness_from_leaf(const Graph& root, const TreeNode& leaf, const OracleBounds& bounds) {
    if (leaf.graph.order() > bounds.unichord_max_n) return std::nullopt;
    auto w = find_long_unichord(leaf.graph, bounds);
    if (!w) return std::nullopt;
    auto realize = [&](VertexId v) {
        auto it = leaf.realization.find(v);
        return it == leaf.realization.end() ? v : it->second;
    };
    for (VertexId& v : w->cycle) v = realize(v);
    w->chord = {realize(w->chord.first), realize(w->chord.second)};
    if (witness_violation(root, *w, 5)) return std::nullopt;
    return w;
}

}  // namespace detail

/// Decides long-unichord-freeness component by component. The witness is
/// best effort: taken from a non-basic leaf small enough for the oracle.
inline Verdict recognize(const Graph& g, const OracleBounds& bounds = default_oracle_bounds()) {
    Verdict v;
    v.n = static_cast<std::size_t>(g.order());
    v.m = g.edge_count();
    for (const VertexSet& c : components(g)) {
        v.trees.push_back(build_tree(induced_subgraph(g, c)));
        const DecompTree& t = v.trees.back();
        TreeStats& s = v.totals;
        s.nodes += t.stats.nodes;
        s.leaves += t.stats.leaves;
        s.max_depth = std::max(s.max_depth, t.stats.max_depth);
        s.chordal_leaves += t.stats.chordal_leaves;
        s.unichord_free_leaves += t.stats.unichord_free_leaves;
        s.non_basic_leaves += t.stats.non_basic_leaves;
        s.universal_nodes += t.stats.universal_nodes;
        s.potential += t.stats.potential;
        s.sum_violations += t.stats.sum_violations;
        if (!t.all_leaves_basic()) {
            v.long_unichord_free = false;
            if (!v.witness)
                for (const TreeNode& n : t.nodes)
                    if (n.leaf_class == LeafClass::non_basic)
                        if ((v.witness = detail::witness_from_leaf(g, n, bounds))) break;
        }
    }
    return v;
}

inline nlohmann::json to_json(const Verdict& v) {
    nlohmann::json j;
    j["verdict"] = v.long_unichord_free ? "long-unichord-free" : "not-long-unichord-free";
    j["long_unichord_free"] = v.long_unichord_free;
    j["n"] = v.n;
    j["m"] = v.m;
    j["components"] = v.trees.size();
    j["tree"] = {{"nodes", v.totals.nodes}, {"leaves", v.totals.leaves}, {"depth", v.totals.max_depth}};
    j["leaf_classes"] = {{"chordal", v.totals.chordal_leaves},
                         {"unichord_free", v.totals.unichord_free_leaves},
                         {"non_basic", v.totals.non_basic_leaves}};
    if (v.witness) j["witness"] = to_json(*v.witness);
    return j;
}

inline nlohmann::json to_json(const DecompTree& t) {
    nlohmann::json nodes = nlohmann::json::array();
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const TreeNode& n = t.nodes[i];
        nlohmann::json j{{"id", i}, {"rule", to_string(n.rule)}, {"n", n.graph.order()}, {"m", n.graph.edge_count()},
                         {"depth", n.depth}, {"vertices", n.graph.ids()}, {"children", n.children}};
        if (n.split) j["split"] = to_json(*n.split);
        if (n.leaf_class) j["leaf_class"] = to_string(*n.leaf_class);
        nodes.push_back(std::move(j));
    }
    return {{"nodes", std::move(nodes)},
            {"stats", {{"nodes", t.stats.nodes}, {"leaves", t.stats.leaves}, {"depth", t.stats.max_depth}, {"potential", t.stats.potential}}}};
}

inline std::string to_dot(const std::vector<DecompTree>& trees) {
    std::ostringstream out;
    out << "digraph decomposition {\n  node [shape=box];\n";
    for (std::size_t c = 0; c < trees.size(); ++c) {
        const auto& t = trees[c];
        for (std::size_t i = 0; i < t.nodes.size(); ++i) {
            const TreeNode& n = t.nodes[i];
            out << "  t" << c << "_" << i << " [label=\"" << to_string(n.rule);
            if (n.leaf_class) out << "\\n" << to_string(*n.leaf_class);
            out << "\\nn=" << n.graph.order() << " m=" << n.graph.edge_count() << "\"];\n";
            for (int ch : n.children) out << "  t" << c << "_" << i << " -> t" << c << "_" << ch << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace luf
