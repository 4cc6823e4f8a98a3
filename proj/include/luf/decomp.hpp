#pragma once

// Universal vertices, cutvertices, amalgams (1-joins when K is empty),
// proper 2-cutsets, their blocks of decomposition, and the potential f(G).

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "luf/detail/twosat.hpp"
#include "luf/error.hpp"
#include "luf/graph.hpp"
#include "luf/split.hpp"

namespace luf {

inline VertexSet find_universal_vertices(const Graph& g) {
    VertexSet out;
    for (int i = 0; i < g.order(); ++i)
        if (g.degree(i) == g.order() - 1) out.push_back(g.id(i));
    return out;
}

/// Articulation points as local indices, ascending.
inline std::vector<int> articulation_points(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, std::size_t>> call;
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0) continue;
        int root_children = 0;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto& [x, k] = call.back();
            const auto& nb = g.neighbors(x);
            if (k < nb.size()) {
                int y = nb[k++];
                auto uy = static_cast<std::size_t>(y);
                if (disc[uy] < 0) {
                    parent[uy] = x;
                    disc[uy] = low[uy] = timer++;
                    if (x == root) ++root_children;
                    call.push_back({y, 0});
                } else if (y != parent[static_cast<std::size_t>(x)]) {
                    low[static_cast<std::size_t>(x)] = std::min(low[static_cast<std::size_t>(x)], disc[uy]);
                }
                continue;
            }
            int done = x;
            call.pop_back();
            if (!call.empty()) {
                int p = call.back().first;
                auto up = static_cast<std::size_t>(p);
                low[up] = std::min(low[up], low[static_cast<std::size_t>(done)]);
                if (p != root && low[static_cast<std::size_t>(done)] >= disc[up]) is_cut[up] = 1;
            }
        }
        if (root_children > 1) is_cut[static_cast<std::size_t>(root)] = 1;
    }
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (is_cut[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

/// Cutvertex split at the smallest-id articulation point. X1 is the
/// component of G - v holding the smallest remaining vertex.
inline std::optional<Split> find_cutvertex(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("find_cutvertex: graph is disconnected");
    auto cuts = articulation_points(g);
    if (cuts.empty()) return std::nullopt;
    int v = cuts.front();
    std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
    removed[static_cast<std::size_t>(v)] = 1;
    std::vector<int> label;
    component_labels(g, label, removed);
    int first = label[static_cast<std::size_t>(v == 0 ? 1 : 0)];
    Split s;
    s.kind = SplitKind::cutvertex;
    s.k = {g.id(v)};
    for (int i = 0; i < g.order(); ++i) {
        if (i == v) continue;
        (label[static_cast<std::size_t>(i)] == first ? s.x1 : s.x2).push_back(g.id(i));
    }
    return s;
}

namespace detail {

// Amalgam search with a seed edge uv, u in A1 and v in A2.
//
// Every other vertex x gets a label in {side 1, side 2, K}. Once u and v are
// fixed, A1 = X1 n N(v) and A2 = X2 n N(u), so the amalgam conditions become
// pairwise constraints between labels, determined by each vertex's type
// (membership in N(u), N(v)) and adjacency. Each label is encoded by two
// booleans (alpha, beta): side 1 = (1,0), side 2 = (0,1), K = (1,1). All the
// resulting pair relations are closed under the majority operation, so the
// search is exactly a 2-SAT instance.

enum VType : int { kTypeR = 0, kTypeQ = 1, kTypeP = 2, kTypeC = 3 };  // bit0: in N(v), bit1: in N(u)
enum Label : int { kSide1 = 0, kSide2 = 1, kInK = 2 };

inline bool label_pair_allowed(int tx, int ty, bool adj, int lx, int ly) {
    const bool xv = tx & 1, xu = tx & 2, yv = ty & 1, yu = ty & 2;
    if (lx == kSide1 && ly == kSide2) return adj == (xv && yu);
    if (lx == kSide2 && ly == kSide1) return adj == (yv && xu);
    if (lx == kInK && ly == kInK) return adj;
    if (lx == kInK && ly == kSide1) return !yv || adj;
    if (lx == kInK && ly == kSide2) return !yu || adj;
    if (ly == kInK && lx == kSide1) return !xv || adj;
    if (ly == kInK && lx == kSide2) return !xu || adj;
    return true;
}

inline std::array<int, 2> label_bits(int l) {
    if (l == kSide1) return {1, 0};
    if (l == kSide2) return {0, 1};
    return {1, 1};
}

// Literal over the four pair variables: var in {0: alpha_x, 1: beta_x, 2: alpha_y, 3: beta_y}.
struct PairLit {
    int var;
    bool positive;
};
using PairClause = std::array<PairLit, 2>;

/// All 2-clauses over the pair variables implied by the allowed relation.
inline std::vector<PairClause> derive_pair_clauses(int tx, int ty, bool adj) {
    auto domain = [](int t) {
        return t == kTypeC ? std::vector<int>{kSide1, kSide2, kInK} : std::vector<int>{kSide1, kSide2};
    };
    std::vector<std::array<int, 4>> allowed;
    for (int lx : domain(tx))
        for (int ly : domain(ty))
            if (label_pair_allowed(tx, ty, adj, lx, ly)) {
                auto bx = label_bits(lx), by = label_bits(ly);
                allowed.push_back({bx[0], bx[1], by[0], by[1]});
            }
    std::vector<PairClause> out;
    for (int a = 0; a < 8; ++a)
        for (int b = a; b < 8; ++b) {
            PairLit la{a / 2, a % 2 == 0}, lb{b / 2, b % 2 == 0};
            bool implied = true;
            for (const auto& t : allowed) {
                bool sa = (t[static_cast<std::size_t>(la.var)] == 1) == la.positive;
                bool sb = (t[static_cast<std::size_t>(lb.var)] == 1) == lb.positive;
                if (!sa && !sb) {
                    implied = false;
                    break;
                }
            }
            if (implied) out.push_back({la, lb});
        }
    return out;
}

struct PairClauseTable {
    // [tx][ty][adj]
    std::array<std::array<std::array<std::vector<PairClause>, 2>, 4>, 4> clauses;
    std::array<std::array<std::array<bool, 2>, 4>, 4> trivial{};

    PairClauseTable() {
        for (int tx = 0; tx < 4; ++tx)
            for (int ty = 0; ty < 4; ++ty)
                for (int adj = 0; adj < 2; ++adj) {
                    bool all = true;
                    int dx = tx == kTypeC ? 3 : 2, dy = ty == kTypeC ? 3 : 2;
                    for (int lx = 0; lx < dx; ++lx)
                        for (int ly = 0; ly < dy; ++ly)
                            if (!label_pair_allowed(tx, ty, adj != 0, lx, ly)) all = false;
                    trivial[static_cast<std::size_t>(tx)][static_cast<std::size_t>(ty)][static_cast<std::size_t>(adj)] = all;
                    if (!all)
                        clauses[static_cast<std::size_t>(tx)][static_cast<std::size_t>(ty)][static_cast<std::size_t>(adj)] =
                            derive_pair_clauses(tx, ty, adj != 0);
                }
    }
};

inline const PairClauseTable& pair_clause_table() {
    static const PairClauseTable table;
    return table;
}

class AmalgamSeedSearch {
public:
    AmalgamSeedSearch(const Graph& g, int u, int v, bool allow_clique)
        : g_(g), u_(u), v_(v), allow_clique_(allow_clique), sat_(2 * g.order()), type_(static_cast<std::size_t>(g.order()), kTypeR) {
        for (int x : g.neighbors(v)) type_[static_cast<std::size_t>(x)] |= 1;
        for (int x : g.neighbors(u)) type_[static_cast<std::size_t>(x)] |= 2;
        build();
    }

    std::optional<Split> run() {
        auto model = sat_.solve_assuming({});
        if (!model) return std::nullopt;
        auto labels = decode(*model);
        auto [n1, n2] = side_sizes(labels);
        if (n1 >= 2 && n2 >= 2) return to_split(labels);

        // Sides too small: look for a second member of each deficient side.
        std::vector<int> base = {alpha(u_), TwoSat::negate(beta(u_)), TwoSat::negate(alpha(v_)), beta(v_)};
        std::vector<int> need1 = n1 < 2 ? candidates(base, kSide1) : std::vector<int>{-1};
        for (int w : need1) {
            std::vector<int> lits = base;
            if (w >= 0) append_side(lits, w, kSide1);
            if (w >= 0) {
                auto m = solve_with(lits);
                if (!m) continue;
                auto lab = decode(*m);
                auto [a, b] = side_sizes(lab);
                if (a >= 2 && b >= 2) return to_split(lab);
            }
            std::vector<int> need2 = candidates(lits, kSide2);
            for (int z : need2) {
                std::vector<int> both = lits;
                append_side(both, z, kSide2);
                auto m = solve_with(both);
                if (!m) continue;
                auto lab = decode(*m);
                auto [a, b] = side_sizes(lab);
                if (a >= 2 && b >= 2) return to_split(lab);
            }
        }
        return std::nullopt;
    }

private:
    int alpha(int x) const { return TwoSat::pos(2 * x); }
    int beta(int x) const { return TwoSat::pos(2 * x + 1); }
    void build() {
        const int n = g_.order();
        for (int x = 0; x < n; ++x) {
            sat_.add_clause(alpha(x), beta(x));
            bool may_be_k = allow_clique_ && type_[static_cast<std::size_t>(x)] == kTypeC;
            if (!may_be_k) sat_.add_clause(TwoSat::negate(alpha(x)), TwoSat::negate(beta(x)));
        }
        sat_.add_clause(alpha(u_), alpha(u_));
        sat_.add_clause(TwoSat::negate(beta(u_)), TwoSat::negate(beta(u_)));
        sat_.add_clause(TwoSat::negate(alpha(v_)), TwoSat::negate(alpha(v_)));
        sat_.add_clause(beta(v_), beta(v_));

        for (int x = 0; x < n; ++x) {
            if (x == u_ || x == v_) continue;
            add_pair(x, u_, g_.adjacent(x, u_));
            add_pair(x, v_, g_.adjacent(x, v_));
        }
        for (int x = 0; x < n; ++x) {
            if (x == u_ || x == v_) continue;
            for (int y : g_.neighbors(x))
                if (y > x && y != u_ && y != v_) add_pair(x, y, true);
        }
        // Non-edges that constrain: both endpoints inside N(u) u N(v).
        std::vector<int> near;
        for (int x = 0; x < n; ++x)
            if (x != u_ && x != v_ && type_[static_cast<std::size_t>(x)] != kTypeR) near.push_back(x);
        const auto& table = pair_clause_table();
        for (std::size_t i = 0; i < near.size(); ++i)
            for (std::size_t j = i + 1; j < near.size(); ++j) {
                int x = near[i], y = near[j];
                if (table.trivial[static_cast<std::size_t>(type_[static_cast<std::size_t>(x)])][static_cast<std::size_t>(type_[static_cast<std::size_t>(y)])][0]) continue;
                if (g_.adjacent(x, y)) continue;
                add_pair(x, y, false);
            }
    }

    void add_pair(int x, int y, bool adj) {
        const auto& table = pair_clause_table();
        auto tx = static_cast<std::size_t>(type_[static_cast<std::size_t>(x)]);
        auto ty = static_cast<std::size_t>(type_[static_cast<std::size_t>(y)]);
        auto a = static_cast<std::size_t>(adj);
        if (table.trivial[tx][ty][a]) return;
        for (const auto& c : table.clauses[tx][ty][a]) {
            auto to_lit = [&](const PairLit& p) {
                int var = p.var < 2 ? 2 * x + p.var : 2 * y + (p.var - 2);
                return p.positive ? TwoSat::pos(var) : TwoSat::neg(var);
            };
            sat_.add_clause(to_lit(c[0]), to_lit(c[1]));
        }
    }

    std::vector<int> decode(const std::vector<char>& model) const {
        std::vector<int> lab(static_cast<std::size_t>(g_.order()));
        for (int x = 0; x < g_.order(); ++x) {
            bool a = model[static_cast<std::size_t>(2 * x)], b = model[static_cast<std::size_t>(2 * x + 1)];
            lab[static_cast<std::size_t>(x)] = a && b ? kInK : (a ? kSide1 : kSide2);
        }
        return lab;
    }

    static std::pair<int, int> side_sizes(const std::vector<int>& lab) {
        int a = 0, b = 0;
        for (int l : lab) {
            a += l == kSide1;
            b += l == kSide2;
        }
        return {a, b};
    }

    void append_side(std::vector<int>& lits, int w, int side) const {
        if (side == kSide1) {
            lits.push_back(alpha(w));
            lits.push_back(TwoSat::negate(beta(w)));
        } else {
            lits.push_back(TwoSat::negate(alpha(w)));
            lits.push_back(beta(w));
        }
    }

    std::vector<int> candidates(const std::vector<int>& base, int side) {
        std::vector<int> out;
        if (!sat_.fix_base(base)) return out;
        std::vector<int> lits;
        for (int w = 0; w < g_.order(); ++w) {
            if (w == u_ || w == v_) continue;
            lits.clear();
            append_side(lits, w, side);
            if (sat_.consistent_with(lits)) out.push_back(w);
        }
        return out;
    }

    std::optional<std::vector<char>> solve_with(const std::vector<int>& units) { return sat_.solve_assuming(units); }

    Split to_split(const std::vector<int>& lab) const {
        Split s;
        s.kind = SplitKind::amalgam;
        for (int x = 0; x < g_.order(); ++x) {
            VertexId id = g_.id(x);
            int l = lab[static_cast<std::size_t>(x)];
            if (l == kInK) {
                s.k.push_back(id);
            } else if (l == kSide1) {
                s.x1.push_back(id);
                if (x == u_ || g_.adjacent(x, v_)) s.a1.push_back(id);
            } else {
                s.x2.push_back(id);
                if (x == v_ || g_.adjacent(x, u_)) s.a2.push_back(id);
            }
        }
        return s;
    }

    const Graph& g_;
    int u_, v_;
    bool allow_clique_;
    TwoSat sat_;
    std::vector<int> type_;
};

}  // namespace detail

/// Amalgam split (a 1-join when K is empty), or nullopt when none exists.
///
/// Every edge uv is tried as a seed with u in A1 and v in A2; for a fixed
/// seed the remaining conditions form a 2-SAT instance, so the search is
/// complete. With `allow_clique` false only splits with K empty are sought.
inline std::optional<Split> find_amalgam(const Graph& g, bool allow_clique = true) {
    if (!is_connected(g)) throw PreconditionError("find_amalgam: graph is disconnected");
    if (!find_universal_vertices(g).empty()) throw PreconditionError("find_amalgam: graph has a universal vertex");
    if (!articulation_points(g).empty()) throw PreconditionError("find_amalgam: graph has a cutvertex");
    if (g.order() < 4) return std::nullopt;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            detail::AmalgamSeedSearch search(g, u, v, allow_clique);
            if (auto s = search.run()) return s;
        }
    return std::nullopt;
}

inline std::optional<Split> find_one_join(const Graph& g) { return find_amalgam(g, false); }

/// Proper 2-cutset split, or nullopt. Requires a connected graph without cutvertex.
inline std::optional<Split> find_proper_2cutset(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("find_proper_2cutset: graph is disconnected");
    if (!articulation_points(g).empty()) throw PreconditionError("find_proper_2cutset: graph has a cutvertex");
    const int n = g.order();
    if (n < 6) return std::nullopt;  // |X1|, |X2| >= 2 plus {a, b}
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::vector<int> label;
    for (int a = 0; a < n; ++a) {
        std::vector<int> keep;
        keep.reserve(static_cast<std::size_t>(n - 1));
        for (int i = 0; i < n; ++i)
            if (i != a) keep.push_back(i);
        Graph ga = g.induced_local(keep);
        for (int bl : articulation_points(ga)) {
            int b = g.index(ga.id(bl));
            if (b < a || g.adjacent(a, b)) continue;
            removed.assign(static_cast<std::size_t>(n), 0);
            removed[static_cast<std::size_t>(a)] = removed[static_cast<std::size_t>(b)] = 1;
            int k = component_labels(g, label, removed);
            std::vector<VertexSet> comp(static_cast<std::size_t>(k));
            for (int i = 0; i < n; ++i)
                if (int l = label[static_cast<std::size_t>(i)]; l >= 0) comp[static_cast<std::size_t>(l)].push_back(g.id(i));
            // Without a cutvertex every component touches both a and b, so each
            // side only needs one component and at least two vertices.
            std::optional<std::pair<std::size_t, std::size_t>> pick;
            for (std::size_t f = 0; f < comp.size() && !pick; ++f) {
                if (comp[f].size() >= 2 && static_cast<int>(n - 2 - comp[f].size()) >= 2) pick = {f, f};
            }
            for (std::size_t f = 0; f < comp.size() && !pick; ++f)
                for (std::size_t c = 0; c < comp.size() && !pick; ++c) {
                    if (c == f || comp.size() < 3) continue;
                    if (static_cast<int>(n - 2 - comp[f].size() - comp[c].size()) >= 2) pick = {f, c};
                }
            if (!pick) continue;
            Split s;
            s.kind = SplitKind::proper_2cutset;
            s.a = g.id(a);
            s.b = g.id(b);
            for (std::size_t c = 0; c < comp.size(); ++c) {
                bool first = c == pick->first || c == pick->second;
                auto& side = first ? s.x1 : s.x2;
                side.insert(side.end(), comp[c].begin(), comp[c].end());
            }
            s.x1 = make_set(std::move(s.x1));
            s.x2 = make_set(std::move(s.x2));
            return s;
        }
    }
    return std::nullopt;
}

/// Blocks of decomposition. For a universal-set split only `g1` (= G - X) is set.
struct Blocks {
    Graph g1;
    std::optional<Graph> g2;
    VertexId marker_in_g1 = -1;  ///< u2 (amalgam) or x2 (proper 2-cutset)
    VertexId marker_in_g2 = -1;  ///< u1 (amalgam) or x1 (proper 2-cutset)
};

inline Blocks blocks(const Graph& g, const Split& s) {
    if (auto why = split_violation(g, s)) throw PreconditionError("blocks: invalid split: " + *why);
    Blocks out;
    switch (s.kind) {
        case SplitKind::universal_set:
            out.g1 = remove_vertices(g, s.universal);
            break;
        case SplitKind::cutvertex:
            out.g1 = induced_subgraph(g, set_union(s.x1, s.k));
            out.g2 = induced_subgraph(g, set_union(s.x2, s.k));
            break;
        case SplitKind::amalgam: {
            out.marker_in_g1 = g.max_id() + 1;
            out.marker_in_g2 = g.max_id() + 2;
            out.g1 = induced_subgraph(g, set_union(s.x1, s.k)).with_vertex(out.marker_in_g1, set_union(s.a1, s.k));
            out.g2 = induced_subgraph(g, set_union(s.x2, s.k)).with_vertex(out.marker_in_g2, set_union(s.a2, s.k));
            break;
        }
        case SplitKind::proper_2cutset: {
            VertexSet ab = make_set({s.a, s.b});
            out.marker_in_g1 = g.max_id() + 1;
            out.marker_in_g2 = g.max_id() + 2;
            out.g1 = induced_subgraph(g, set_union(s.x1, ab)).with_vertex(out.marker_in_g1, ab);
            out.g2 = induced_subgraph(g, set_union(s.x2, ab)).with_vertex(out.marker_in_g2, ab);
            break;
        }
    }
    return out;
}

/// max(number of non-adjacent vertex pairs, 1).
inline std::uint64_t potential_f(const Graph& g) {
    auto n = static_cast<std::uint64_t>(g.order());
    std::uint64_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
    std::uint64_t non_edges = pairs - g.edge_count();
    return std::max<std::uint64_t>(non_edges, 1);
}

}  // namespace luf
