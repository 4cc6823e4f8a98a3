#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "luf/error.hpp"
#include "luf/vertex_set.hpp"

namespace luf {

using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph with stable vertex identifiers.
///
/// Vertices are addressed two ways: by their identifier (VertexId, stable
/// across induced subgraphs and blocks) and by a dense local index in
/// [0, order()). Local index i always refers to the i-th smallest identifier.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from identifiers and an edge list over identifiers.
    /// Loops and unknown endpoints throw; parallel edges are merged.
    static Graph from_edges(VertexSet ids, const std::vector<Edge>& edges) {
        Graph g;
        g.ids_ = make_set(std::move(ids));
        g.adj_.assign(g.ids_.size(), {});
        for (auto [u, v] : edges) {
            if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
            auto iu = g.index_of(u);
            auto iv = g.index_of(v);
            if (!iu || !iv)
                throw PreconditionError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        " has an endpoint outside the vertex set");
            g.adj_[*iu].push_back(*iv);
            g.adj_[*iv].push_back(*iu);
        }
        g.normalize();
        return g;
    }

    /// Graph on identifiers 0..n-1.
    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        VertexSet ids(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
        return from_edges(std::move(ids), edges);
    }

    /// Builds from local adjacency lists (indices into the sorted id list).
    static Graph from_local(VertexSet sorted_ids, std::vector<std::vector<int>> adj) {
        Graph g;
        g.ids_ = std::move(sorted_ids);
        g.adj_ = std::move(adj);
        g.normalize();
        return g;
    }

    int order() const noexcept { return static_cast<int>(ids_.size()); }
    bool empty() const noexcept { return ids_.empty(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const VertexSet& ids() const noexcept { return ids_; }
    VertexId id(int i) const { return ids_[static_cast<std::size_t>(i)]; }
    VertexId max_id() const { return ids_.empty() ? -1 : ids_.back(); }

    std::optional<int> index_of(VertexId v) const {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) return std::nullopt;
        return static_cast<int>(it - ids_.begin());
    }
    int index(VertexId v) const {
        auto i = index_of(v);
        if (!i) throw PreconditionError("unknown vertex " + std::to_string(v));
        return *i;
    }
    bool has_vertex(VertexId v) const { return index_of(v).has_value(); }

    const std::vector<int>& neighbors(int i) const { return adj_[static_cast<std::size_t>(i)]; }
    int degree(int i) const { return static_cast<int>(neighbors(i).size()); }

    bool adjacent(int i, int j) const {
        const auto& a = neighbors(i);
        return std::binary_search(a.begin(), a.end(), j);
    }
    bool adjacent_ids(VertexId u, VertexId v) const {
        auto iu = index_of(u);
        auto iv = index_of(v);
        return iu && iv && adjacent(*iu, *iv);
    }

    /// Neighbour identifiers of vertex `v`.
    VertexSet neighbor_ids(VertexId v) const {
        VertexSet out;
        for (int j : neighbors(index(v))) out.push_back(id(j));
        return out;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (int i = 0; i < order(); ++i)
            for (int j : neighbors(i))
                if (i < j) out.emplace_back(id(i), id(j));
        return out;
    }

    /// Induced subgraph on the given local indices (any order, no duplicates).
    Graph induced_local(std::span<const int> keep) const {
        std::vector<int> sorted(keep.begin(), keep.end());
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> remap(ids_.size(), -1);
        VertexSet ids;
        ids.reserve(sorted.size());
        for (std::size_t k = 0; k < sorted.size(); ++k) {
            remap[static_cast<std::size_t>(sorted[k])] = static_cast<int>(k);
            ids.push_back(id(sorted[k]));
        }
        std::vector<std::vector<int>> adj(sorted.size());
        for (std::size_t k = 0; k < sorted.size(); ++k)
            for (int j : neighbors(sorted[k]))
                if (int r = remap[static_cast<std::size_t>(j)]; r >= 0) adj[k].push_back(r);
        return from_local(std::move(ids), std::move(adj));
    }

    /// Local indices of the members of `s`; throws on unknown identifiers.
    std::vector<int> indices(const VertexSet& s) const {
        std::vector<int> out;
        out.reserve(s.size());
        for (VertexId v : s) out.push_back(index(v));
        return out;
    }

    VertexSet to_ids(std::span<const int> local) const {
        VertexSet out;
        out.reserve(local.size());
        for (int i : local) out.push_back(id(i));
        return make_set(std::move(out));
    }

    /// Returns a copy with one extra vertex `v` adjacent to `nbrs`.
    Graph with_vertex(VertexId v, const VertexSet& nbrs) const {
        std::vector<Edge> es = edges();
        for (VertexId u : nbrs) es.emplace_back(v, u);
        return from_edges(set_with(ids_, v), es);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.ids_ == b.ids_ && a.adj_ == b.adj_;
    }

private:
    void normalize() {
        edge_count_ = 0;
        for (auto& a : adj_) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
            edge_count_ += a.size();
        }
        edge_count_ /= 2;
    }

    VertexSet ids_;
    std::vector<std::vector<int>> adj_;
    std::size_t edge_count_ = 0;
};

/// Induced subgraph on `s`; identifiers are preserved.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    auto local = g.indices(s);
    return g.induced_local(local);
}

inline Graph remove_vertices(const Graph& g, const VertexSet& s) {
    std::vector<int> keep;
    for (int i = 0; i < g.order(); ++i)
        if (!contains(s, g.id(i))) keep.push_back(i);
    return g.induced_local(keep);
}

/// Component label per local index; returns number of components.
/// Vertices flagged in `removed` (if non-empty) are skipped and labelled -1.
inline int component_labels(const Graph& g, std::vector<int>& label,
                            const std::vector<char>& removed = {}) {
    const int n = g.order();
    label.assign(static_cast<std::size_t>(n), -1);
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (label[static_cast<std::size_t>(s)] >= 0) continue;
        if (!removed.empty() && removed[static_cast<std::size_t>(s)]) continue;
        label[static_cast<std::size_t>(s)] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbors(x)) {
                if (label[static_cast<std::size_t>(y)] >= 0) continue;
                if (!removed.empty() && removed[static_cast<std::size_t>(y)]) continue;
                label[static_cast<std::size_t>(y)] = count;
                stack.push_back(y);
            }
        }
        ++count;
    }
    return count;
}

/// Connected components ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
    std::vector<int> label;
    int k = component_labels(g, label);
    std::vector<VertexSet> out(static_cast<std::size_t>(k));
    for (int i = 0; i < g.order(); ++i) out[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])].push_back(g.id(i));
    return out;
}

inline bool is_connected(const Graph& g) {
    std::vector<int> label;
    return component_labels(g, label) <= 1;
}

inline bool is_clique(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

/// True iff the members of `s` are pairwise adjacent in `g`.
inline bool is_clique_set(const Graph& g, const VertexSet& s) {
    auto idx = g.indices(s);
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (!g.adjacent(idx[a], idx[b])) return false;
    return true;
}

/// `x` is complete to `s` (x not in s, s non-empty, x adjacent to every member).
inline bool is_complete_to(const Graph& g, VertexId x, const VertexSet& s) {
    if (s.empty() || contains(s, x)) return false;
    int ix = g.index(x);
    for (VertexId y : s)
        if (!g.adjacent(ix, g.index(y))) return false;
    return true;
}

}  // namespace luf
