#pragma once

// Bron-Kerbosch with Tomita pivoting over dynamic bitsets.

#include <algorithm>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "luf/graph.hpp"

namespace luf::detail {

using Bits = boost::dynamic_bitset<>;

inline std::vector<Bits> neighbor_bits(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<Bits> nb(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
        for (int j : g.neighbors(static_cast<int>(i))) nb[i].set(static_cast<std::size_t>(j));
    return nb;
}

class MaximalCliqueWalker {
public:
    explicit MaximalCliqueWalker(const Graph& g) : nb_(neighbor_bits(g)) {}

    /// Calls `visit(clique)` with local indices (ascending) for each maximal
    /// clique. Stops early when `visit` returns false.
    template <class Visit>
    void run(Visit&& visit) {
        const std::size_t n = nb_.size();
        if (n == 0) return;
        Bits p(n), x(n);
        p.set();
        std::vector<int> r;
        recurse(r, p, x, visit);
    }

private:
    template <class Visit>
    bool recurse(std::vector<int>& r, Bits& p, Bits& x, Visit& visit) {
        if (p.none()) {
            if (x.none()) {
                std::vector<int> sorted = r;
                std::sort(sorted.begin(), sorted.end());
                return visit(sorted);
            }
            return true;
        }
        // Pivot: vertex of P u X with the most neighbors in P.
        std::size_t pivot = Bits::npos, best = 0;
        for (const Bits* s : {&p, &x})
            for (auto u = s->find_first(); u != Bits::npos; u = s->find_next(u)) {
                std::size_t c = (nb_[u] & p).count();
                if (pivot == Bits::npos || c > best) {
                    pivot = u;
                    best = c;
                }
            }
        Bits cand = p - nb_[pivot];
        for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
            Bits p2 = p & nb_[v];
            Bits x2 = x & nb_[v];
            r.push_back(static_cast<int>(v));
            bool go = recurse(r, p2, x2, visit);
            r.pop_back();
            if (!go) return false;
            p.reset(v);
            x.set(v);
        }
        return true;
    }

    std::vector<Bits> nb_;
};

template <class Visit>
void for_each_maximal_clique(const Graph& g, Visit&& visit) {
    MaximalCliqueWalker w(g);
    w.run(visit);
}

/// Size of a largest clique.
inline int max_clique_size(const Graph& g) {
    int best = 0;
    for_each_maximal_clique(g, [&](const std::vector<int>& c) {
        best = std::max(best, static_cast<int>(c.size()));
        return true;
    });
    return best;
}

}  // namespace luf::detail
