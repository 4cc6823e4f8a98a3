#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace luf::detail {

/// 2-SAT over `vars` boolean variables. Literal 2v is "v true", 2v+1 is "v false".
class TwoSat {
public:
    explicit TwoSat(int vars) : vars_(vars) {}

    static int pos(int v) { return 2 * v; }
    static int neg(int v) { return 2 * v + 1; }
    static int negate(int lit) { return lit ^ 1; }

    int variables() const { return vars_; }

    /// Adds the clause (a or b). Use a == b for a unit clause.
    void add_clause(int a, int b) {
        edges_.push_back({negate(a), b});
        if (a != b) edges_.push_back({negate(b), a});
        built_ = false;
        model_checked_ = false;
    }

    /// A satisfying assignment, or nullopt when none exists.
    std::optional<std::vector<char>> solve() {
        build();
        const int n = 2 * vars_;
        std::vector<int> comp(static_cast<std::size_t>(n), -1);
        int ncomp = tarjan(comp);
        std::vector<char> value(static_cast<std::size_t>(vars_));
        for (int v = 0; v < vars_; ++v) {
            int cp = comp[static_cast<std::size_t>(pos(v))];
            int cn = comp[static_cast<std::size_t>(neg(v))];
            if (cp == cn) return std::nullopt;
            // Tarjan numbers components in reverse topological order.
            value[static_cast<std::size_t>(v)] = cp < cn;
        }
        (void)ncomp;
        return value;
    }

    /// For a satisfiable formula: true iff the literals `lits` can all be true
    /// simultaneously in some model (their implication closure is consistent).
    bool consistent(std::span<const int> lits) {
        build();
        ++epoch_;
        if (mark_.size() != static_cast<std::size_t>(2 * vars_)) mark_.assign(static_cast<std::size_t>(2 * vars_), 0);
        stack_.clear();
        touched_.clear();
        for (int l : lits) {
            if (!visit(l)) return false;
        }
        while (!stack_.empty()) {
            int x = stack_.back();
            stack_.pop_back();
            for (int k = start_[static_cast<std::size_t>(x)]; k < start_[static_cast<std::size_t>(x) + 1]; ++k)
                if (!visit(target_[static_cast<std::size_t>(k)])) return false;
        }
        return true;
    }

    /// A model in which all of `lits` hold, or nullopt. If the formula is
    /// satisfiable and the closure of `lits` is consistent, any model with
    /// the closure imposed on it is again a model: a clause falsified on one
    /// side by the closure has its other literal in the closure.
    std::optional<std::vector<char>> solve_assuming(std::span<const int> lits) {
        if (!model_checked_) {
            model_ = solve();
            model_checked_ = true;
        }
        if (!model_ || !consistent(lits)) return std::nullopt;
        std::vector<char> value = *model_;
        for (int l : touched_) value[static_cast<std::size_t>(l / 2)] = (l & 1) == 0;
        return value;
    }

    /// Fixes `lits` and their implication closure as the base of later
    /// consistent_with() calls. False if the closure is contradictory.
    bool fix_base(std::span<const int> lits) {
        build();
        base_.assign(static_cast<std::size_t>(2 * vars_), 0);
        std::vector<int> stack;
        for (int l : lits) {
            if (base_[static_cast<std::size_t>(TwoSat::negate(l))]) return false;
            if (!base_[static_cast<std::size_t>(l)]) {
                base_[static_cast<std::size_t>(l)] = 1;
                stack.push_back(l);
            }
        }
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int k = start_[static_cast<std::size_t>(x)]; k < start_[static_cast<std::size_t>(x) + 1]; ++k) {
                int y = target_[static_cast<std::size_t>(k)];
                if (base_[static_cast<std::size_t>(TwoSat::negate(y))]) return false;
                if (!base_[static_cast<std::size_t>(y)]) {
                    base_[static_cast<std::size_t>(y)] = 1;
                    stack.push_back(y);
                }
            }
        }
        return true;
    }

    /// consistent() for the fixed base plus `lits`; only the part of the
    /// closure outside the base is explored.
    bool consistent_with(std::span<const int> lits) {
        ++epoch_;
        if (mark_.size() != static_cast<std::size_t>(2 * vars_)) mark_.assign(static_cast<std::size_t>(2 * vars_), 0);
        stack_.clear();
        touched_.clear();
        auto step = [&](int l) {
            if (base_[static_cast<std::size_t>(l)]) return true;
            if (base_[static_cast<std::size_t>(negate(l))]) return false;
            return visit(l);
        };
        for (int l : lits)
            if (!step(l)) return false;
        while (!stack_.empty()) {
            int x = stack_.back();
            stack_.pop_back();
            for (int k = start_[static_cast<std::size_t>(x)]; k < start_[static_cast<std::size_t>(x) + 1]; ++k)
                if (!step(target_[static_cast<std::size_t>(k)])) return false;
        }
        return true;
    }

private:
    struct Arc {
        int from, to;
    };

    bool visit(int l) {
        auto& m = mark_[static_cast<std::size_t>(l)];
        if (m == epoch_) return true;
        if (mark_[static_cast<std::size_t>(negate(l))] == epoch_) return false;
        m = epoch_;
        stack_.push_back(l);
        touched_.push_back(l);
        return true;
    }

    void build() {
        if (built_) return;
        const int n = 2 * vars_;
        start_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (const Arc& a : edges_) ++start_[static_cast<std::size_t>(a.from) + 1];
        for (int i = 0; i < n; ++i) start_[static_cast<std::size_t>(i) + 1] += start_[static_cast<std::size_t>(i)];
        target_.assign(edges_.size(), 0);
        std::vector<int> fill(start_.begin(), start_.end() - 1);
        for (const Arc& a : edges_) target_[static_cast<std::size_t>(fill[static_cast<std::size_t>(a.from)]++)] = a.to;
        built_ = true;
    }

    int tarjan(std::vector<int>& comp) {
        const int n = 2 * vars_;
        std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
        std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
        std::vector<int> scc_stack;
        std::vector<std::pair<int, int>> call;  // (node, next arc)
        int counter = 0, ncomp = 0;
        for (int s = 0; s < n; ++s) {
            if (index[static_cast<std::size_t>(s)] >= 0) continue;
            call.push_back({s, start_[static_cast<std::size_t>(s)]});
            index[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = counter++;
            scc_stack.push_back(s);
            on_stack[static_cast<std::size_t>(s)] = 1;
            while (!call.empty()) {
                auto& [x, k] = call.back();
                if (k < start_[static_cast<std::size_t>(x) + 1]) {
                    int y = target_[static_cast<std::size_t>(k++)];
                    if (index[static_cast<std::size_t>(y)] < 0) {
                        index[static_cast<std::size_t>(y)] = low[static_cast<std::size_t>(y)] = counter++;
                        scc_stack.push_back(y);
                        on_stack[static_cast<std::size_t>(y)] = 1;
                        call.push_back({y, start_[static_cast<std::size_t>(y)]});
                    } else if (on_stack[static_cast<std::size_t>(y)]) {
                        low[static_cast<std::size_t>(x)] = std::min(low[static_cast<std::size_t>(x)], index[static_cast<std::size_t>(y)]);
                    }
                    continue;
                }
                int done = x;
                call.pop_back();
                if (!call.empty()) {
                    int parent = call.back().first;
                    low[static_cast<std::size_t>(parent)] = std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(done)]);
                }
                if (low[static_cast<std::size_t>(done)] == index[static_cast<std::size_t>(done)]) {
                    int y;
                    do {
                        y = scc_stack.back();
                        scc_stack.pop_back();
                        on_stack[static_cast<std::size_t>(y)] = 0;
                        comp[static_cast<std::size_t>(y)] = ncomp;
                    } while (y != done);
                    ++ncomp;
                }
            }
        }
        return ncomp;
    }

    int vars_;
    std::vector<Arc> edges_;
    std::vector<int> start_, target_;
    bool built_ = false;
    std::vector<std::uint32_t> mark_;
    std::vector<char> base_;
    std::vector<int> touched_;
    std::optional<std::vector<char>> model_;
    bool model_checked_ = false;
    std::uint32_t epoch_ = 0;
    std::vector<int> stack_;
};

}  // namespace luf::detail
