#pragma once

// DSATUR heuristic plus DSATUR branch and bound on local vertex indices.

#include <algorithm>
#include <chrono>
#include <optional>
#include <vector>

#include "luf/error.hpp"
#include "luf/graph.hpp"

namespace luf::detail {

/// Color per local index, colors 0..k-1.
using LocalColoring = std::vector<int>;

inline int palette_size(const LocalColoring& c) {
    int k = 0;
    for (int x : c) k = std::max(k, x + 1);
    return k;
}

/// One DSATUR pass. Ties go to larger degree, then to the smaller index.
inline LocalColoring dsatur_greedy(const Graph& g) {
    const int n = g.order();
    LocalColoring color(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(n));
    std::vector<int> sat(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] >= 0) continue;
            if (best < 0 || sat[static_cast<std::size_t>(v)] > sat[static_cast<std::size_t>(best)] ||
                (sat[static_cast<std::size_t>(v)] == sat[static_cast<std::size_t>(best)] && g.degree(v) > g.degree(best)))
                best = v;
        }
        auto& s = seen[static_cast<std::size_t>(best)];
        int c = 0;
        while (c < static_cast<int>(s.size()) && s[static_cast<std::size_t>(c)]) ++c;
        color[static_cast<std::size_t>(best)] = c;
        for (int w : g.neighbors(best)) {
            auto& sw = seen[static_cast<std::size_t>(w)];
            if (static_cast<int>(sw.size()) <= c) sw.resize(static_cast<std::size_t>(c) + 1, 0);
            if (!sw[static_cast<std::size_t>(c)]) {
                sw[static_cast<std::size_t>(c)] = 1;
                ++sat[static_cast<std::size_t>(w)];
            }
        }
    }
    return color;
}

class DsaturBranchAndBound {
public:
    using Clock = std::chrono::steady_clock;

    DsaturBranchAndBound(const Graph& g, int lower_bound, std::optional<Clock::time_point> deadline)
        : g_(g), n_(g.order()), lower_(lower_bound), deadline_(deadline) {}

    /// Optimal coloring. Throws BoundExceeded when the deadline passes.
    LocalColoring run() {
        best_ = dsatur_greedy(g_);
        best_k_ = palette_size(best_);
        if (best_k_ <= lower_ || n_ == 0) return best_;
        color_.assign(static_cast<std::size_t>(n_), -1);
        stride_ = best_k_;
        count_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(stride_), 0);
        sat_.assign(static_cast<std::size_t>(n_), 0);
        search(0, 0);
        return best_;
    }

private:
    int& cnt(int v, int c) { return count_[static_cast<std::size_t>(v) * static_cast<std::size_t>(stride_) + static_cast<std::size_t>(c)]; }

    void assign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = c;
        for (int w : g_.neighbors(v))
            if (cnt(w, c)++ == 0) ++sat_[static_cast<std::size_t>(w)];
    }
    void unassign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = -1;
        for (int w : g_.neighbors(v))
            if (--cnt(w, c) == 0) --sat_[static_cast<std::size_t>(w)];
    }

    bool search(int colored, int used) {
        if (deadline_ && (++ticks_ & 1023) == 0 && Clock::now() > *deadline_)
            throw BoundExceeded("exact coloring: time limit exceeded");
        if (colored == n_) {
            best_ = color_;
            best_k_ = used;
            return best_k_ <= lower_;
        }
        int v = -1;
        for (int x = 0; x < n_; ++x) {
            if (color_[static_cast<std::size_t>(x)] >= 0) continue;
            if (v < 0 || sat_[static_cast<std::size_t>(x)] > sat_[static_cast<std::size_t>(v)] ||
                (sat_[static_cast<std::size_t>(x)] == sat_[static_cast<std::size_t>(v)] && g_.degree(x) > g_.degree(v)))
                v = x;
        }
        for (int c = 0; c <= used && c < best_k_ - 1; ++c) {
            if (cnt(v, c) > 0) continue;
            assign(v, c);
            bool stop = search(colored + 1, std::max(used, c + 1));
            unassign(v, c);
            if (stop) return true;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int lower_;
    std::optional<Clock::time_point> deadline_;
    LocalColoring best_, color_;
    int best_k_ = 0;
    int stride_ = 0;
    std::vector<int> count_, sat_;
    unsigned ticks_ = 0;
};

/// Optimal coloring of `g`; `lower_bound` (e.g. a known clique size) allows early exit.
inline LocalColoring exact_coloring(const Graph& g, int lower_bound = 0,
                                    std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt) {
    DsaturBranchAndBound bb(g, lower_bound, deadline);
    return bb.run();
}

}  // namespace luf::detail
