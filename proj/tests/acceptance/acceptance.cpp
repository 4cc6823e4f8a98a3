// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "luf/luf.hpp"

using namespace luf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
    bool pass = true;
    std::string detail;
};

std::vector<std::pair<int, Result>> results;

void report(int id, const std::string& title, const Result& r) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << r.detail << ")" << std::endl;
    results.emplace_back(id, r);
}

template <class Task>
void parallel_for(std::size_t count, Task&& task) {
    std::atomic<std::size_t> next{0};
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < count;) task(i);
        });
    for (auto& th : pool) th.join();
}

// Tree statistics gathered for the tree-size criterion.
struct TreeAudit {
    std::mutex m;
    std::size_t trees = 0;
    std::size_t leaf_bound_violations = 0;
    std::size_t sum_violations = 0;

    void add(const Verdict& v) {
        std::lock_guard lock(m);
        for (const DecompTree& t : v.trees) {
            ++trees;
            if (!t.leaf_bound_holds()) ++leaf_bound_violations;
            sum_violations += t.stats.sum_violations;
        }
    }
} audit;

// ---- connected graphs on at most 7 vertices, one per isomorphism class ----

using Adj = std::vector<std::uint8_t>;  // row masks

// Minimum, over orderings by nondecreasing degree, of the upper triangle
// read as a bit string; equal for isomorphic graphs.
std::uint32_t canonical_code(const Adj& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    auto deg = [&](int v) { return std::popcount(static_cast<unsigned>(adj[static_cast<std::size_t>(v)])); };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return deg(a) < deg(b); });
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && deg(order[static_cast<std::size_t>(j)]) == deg(order[static_cast<std::size_t>(i)])) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::uint32_t best = UINT32_MAX;
    auto encode = [&] {
        std::uint32_t code = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                code = (code << 1) | ((adj[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] >> order[static_cast<std::size_t>(j)]) & 1u);
        return code;
    };
    auto rec = [&](auto&& self, std::size_t b) -> void {
        if (b == blocks.size()) {
            best = std::min(best, encode());
            return;
        }
        auto first = order.begin() + blocks[b].first, last = order.begin() + blocks[b].second;
        std::sort(first, last);
        do self(self, b + 1);
        while (std::next_permutation(first, last));
    };
    rec(rec, 0);
    return best;
}

Graph graph_of(const Adj& adj) {
    std::vector<Edge> e;
    const int n = static_cast<int>(adj.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((adj[static_cast<std::size_t>(i)] >> j) & 1u) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

// All graphs on n vertices up to isomorphism, grown one vertex at a time.
std::vector<std::vector<Adj>> graphs_up_to(int max_n) {
    std::vector<std::vector<Adj>> by_n(static_cast<std::size_t>(max_n) + 1);
    by_n[1] = {Adj{0}};
    for (int n = 2; n <= max_n; ++n) {
        std::set<std::uint32_t> seen;
        for (const Adj& base : by_n[static_cast<std::size_t>(n) - 1])
            for (unsigned nb = 0; nb < (1u << (n - 1)); ++nb) {
                Adj a = base;
                a.push_back(static_cast<std::uint8_t>(nb));
                for (int v = 0; v < n - 1; ++v)
                    if ((nb >> v) & 1u) a[static_cast<std::size_t>(v)] |= static_cast<std::uint8_t>(1u << (n - 1));
                if (seen.insert(canonical_code(a)).second) by_n[static_cast<std::size_t>(n)].push_back(a);
            }
    }
    return by_n;
}

Graph random_connected(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pick(0.15, 0.85);
    for (;;) {
        double p = pick(rng);
        std::bernoulli_distribution coin(p);
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) e.emplace_back(i, j);
        Graph g = Graph::from_edges(n, e);
        if (is_connected(g)) return g;
    }
}

// ---- criteria ----

Result criterion1() {
    auto t0 = Clock::now();
    auto all = graphs_up_to(7);
    std::vector<Graph> graphs;
    std::size_t classes = 0;
    for (int n = 1; n <= 7; ++n)
        for (const Adj& a : all[static_cast<std::size_t>(n)]) {
            Graph g = graph_of(a);
            if (!is_connected(g)) continue;
            ++classes;
            graphs.push_back(std::move(g));
        }
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> size(1, 10);
    for (int i = 0; i < 10000; ++i) graphs.push_back(random_connected(size(rng), rng));
    std::atomic<std::size_t> disagree{0}, in_class{0};
    std::mutex m;
    std::string first;
    parallel_for(graphs.size(), [&](std::size_t i) {
        const Graph& g = graphs[i];
        Verdict v = recognize(g);
        audit.add(v);
        bool oracle = !find_long_unichord(g);
        if (oracle) ++in_class;
        if (v.long_unichord_free != oracle) {
            ++disagree;
            std::lock_guard lock(m);
            if (first.empty()) first = emit_json(g);
        }
    });
    std::ostringstream d;
    d << classes << " connected graphs on <= 7 vertices (853 on exactly 7 expected: "
      << std::count_if(all[7].begin(), all[7].end(), [](const Adj& a) { return is_connected(graph_of(a)); })
      << "), 10000 random connected graphs on <= 10 vertices, " << in_class << " in class, " << disagree
      << " disagreements, " << seconds_since(t0) << " s";
    if (!first.empty()) d << ", first: " << first;
    return {disagree == 0 && classes == 996, d.str()};
}

Result criterion2() {
    std::size_t bad = 0;
    std::ostringstream d;
    Verdict house = recognize(house_graph());
    audit.add(house);
    bool house_ok = !house.long_unichord_free && house.witness && !witness_violation(house_graph(), *house.witness, 5);
    if (!house_ok) ++bad;
    for (const Graph& g : {petersen_graph(), heawood_graph()}) {
        Verdict v = recognize(g);
        audit.add(v);
        if (!v.long_unichord_free) ++bad;
    }
    Rng rng(2);
    std::size_t chordal_bad = 0, bip_bad = 0;
    for (int i = 0; i < 100; ++i) {
        Graph c = random_chordal(2 + (i * 37) % 199, 2 + i % 8, rng);
        Verdict vc = recognize(c);
        audit.add(vc);
        if (!vc.long_unichord_free) ++chordal_bad;
        Graph b = random_sparse_bipartite(3 + (i * 53) % 198, rng);
        Verdict vb = recognize(b);
        audit.add(vb);
        if (!vb.long_unichord_free || !is_sparse_bipartite(b)) ++bip_bad;
    }
    bad += chordal_bad + bip_bad;
    d << "house witness " << (house_ok ? "valid" : "INVALID") << ", Petersen and Heawood in class, 100 chordal graphs ("
      << chordal_bad << " rejected), 100 sparse-bipartite graphs (" << bip_bad << " rejected)";
    return {bad == 0, d.str()};
}

struct CorpusTotals {
    std::size_t instances = 0, max_n = 0;
    std::size_t splitters = 0, verified = 0, splitter_failures = 0;
    std::size_t peels = 0, peel_checks = 0, peel_failures = 0;
    std::size_t improper = 0, over_bound = 0, errors = 0;
    std::size_t omega_checks = 0, omega_mismatch = 0, oracle_class_checks = 0, oracle_class_failures = 0;
    std::size_t tight = 0;  ///< colorings using exactly f_3(omega) colors
    double seconds = 0;
    std::vector<std::string> first_errors;
};

CorpusTotals run_corpus() {
    auto t0 = Clock::now();
    const std::size_t count = 500;
    CorpusTotals tot;
    tot.instances = count;
    std::mutex m;
    parallel_for(count, [&](std::size_t i) {
        Rng rng(1000 + i);
        InClassOptions o;
        o.universal_probability = i % 3 == 0 ? 0.05 : 0.01;
        o.max_universal = 3;
        // Sizes cover 6..500, with every fifth instance small enough for the oracles.
        int target = i % 5 == 0 ? 6 + static_cast<int>(i % 13) : 10 + static_cast<int>((i * 7919) % 491);
        Graph g = random_in_class_graph(target, rng, o);
        ColorOptions opt;
        opt.checked = true;
        opt.peel_check_max_n = 20;
        CorpusTotals local;
        try {
            Verdict v = recognize(g);
            audit.add(v);
            if (g.order() <= 14) {
                ++local.oracle_class_checks;
                if (find_long_unichord(g)) ++local.oracle_class_failures;
            }
            Coloring c = color(g, opt);
            local.splitters = c.stats.splitters.produced;
            local.verified = c.stats.splitters.verified;
            local.peels = c.stats.peels;
            local.peel_checks = c.stats.peel_checks;
            local.peel_failures = c.stats.peel_check_failures;
            if (coloring_violation(g, c.assignment)) ++local.improper;
            if (static_cast<std::uint64_t>(c.palette_size) > f_k(3, c.omega)) ++local.over_bound;
            if (static_cast<std::uint64_t>(c.palette_size) == f_k(3, c.omega)) ++local.tight;
            if (g.order() <= 18) {
                ++local.omega_checks;
                if (c.omega != clique_number_exact(g)) ++local.omega_mismatch;
            }
        } catch (const InternalError& e) {
            // Checked mode turns a failed splitter verification into an InternalError.
            ++local.splitter_failures;
            local.first_errors.push_back(std::string(e.what()) + " on " + emit_json(g));
        } catch (const std::exception& e) {
            ++local.errors;
            local.first_errors.push_back(std::string(e.what()) + " on " + emit_json(g));
        }
        std::lock_guard lock(m);
        tot.max_n = std::max(tot.max_n, static_cast<std::size_t>(g.order()));
        tot.splitters += local.splitters;
        tot.verified += local.verified;
        tot.splitter_failures += local.splitter_failures;
        tot.peels += local.peels;
        tot.peel_checks += local.peel_checks;
        tot.peel_failures += local.peel_failures;
        tot.improper += local.improper;
        tot.over_bound += local.over_bound;
        tot.tight += local.tight;
        tot.errors += local.errors;
        tot.omega_checks += local.omega_checks;
        tot.omega_mismatch += local.omega_mismatch;
        tot.oracle_class_checks += local.oracle_class_checks;
        tot.oracle_class_failures += local.oracle_class_failures;
        for (auto& s : local.first_errors)
            if (tot.first_errors.size() < 3) tot.first_errors.push_back(s);
    });
    tot.seconds = seconds_since(t0);
    return tot;
}

Result criterion3(const CorpusTotals& t) {
    std::ostringstream d;
    d << t.instances << " instances up to n = " << t.max_n << ", " << t.splitters << " splitters produced, " << t.verified
      << " verified, " << t.splitter_failures << " verification failures, " << t.peels << " peels, " << t.peel_checks
      << " oracle peel checks, " << t.peel_failures << " peels not lowering omega by exactly 1, " << t.errors << " other errors";
    for (const auto& s : t.first_errors) d << "; " << s.substr(0, 400);
    bool ok = t.splitter_failures == 0 && t.errors == 0 && t.splitters == t.verified && t.peel_checks > 0 && t.peel_failures == 0;
    return {ok, d.str()};
}

Result criterion4(const CorpusTotals& t) {
    std::ostringstream d;
    d << t.improper << " improper colorings, " << t.over_bound << " over f_3(omega), " << t.tight << " using exactly f_3(omega), "
      << t.omega_checks << " omega cross-checks with " << t.omega_mismatch << " mismatches, " << t.oracle_class_checks
      << " oracle membership checks with " << t.oracle_class_failures << " failures, " << t.seconds << " s";
    bool ok = t.improper == 0 && t.over_bound == 0 && t.omega_checks > 0 && t.omega_mismatch == 0 && t.oracle_class_failures == 0 &&
              t.errors == 0 && t.splitter_failures == 0 && t.seconds <= 1800;
    return {ok, d.str()};
}

Result criterion5() {
    auto t0 = Clock::now();
    Graph p = petersen_graph();
    Coloring c = color(p, {true, true, 20});
    int chi = chromatic_number_exact(p).chi;
    VertexSet c_label = petersen_vertices({kC}), x_label = petersen_vertices({kX});
    auto q2 = exhaustive_splitter_search(p, {c_label, x_label}, true);
    Embedding identity;
    for (VertexId v : p.ids()) identity.emplace_back(v, v);
    VertexSet h = petersen_splitter(p, identity, {c_label, x_label});
    VertexSet expected = petersen_vertices({kA1, kA2, kA3, kA4, kA5, kA6, kC});
    bool odd = all_odd_cycles_through(induced_subgraph(p, set_union(h, x_label)), petersen_vertices({kA1, kX, kA4}));
    double s = seconds_since(t0);
    std::ostringstream d;
    d << "color uses " << c.palette_size << " colors (bound " << c.bound << "), oracle chi = " << chi
      << ", perfect splitter for ({c},{x}) " << (q2 ? "FOUND" : "absent") << ", splitter for ({c},{x}) "
      << (h == expected ? "is {a1..a6,c}" : "differs from {a1..a6,c}") << ", odd cycles of G[H + x] "
      << (odd ? "all pass a1, x, a4" : "DO NOT all pass a1, x, a4") << ", " << s << " s";
    return {c.palette_size <= 4 && c.bound == 4 && chi == 3 && !q2 && h == expected && odd && s < 60, d.str()};
}

Result criterion6() {
    std::ostringstream d;
    d << audit.trees << " trees from criteria 1-4, " << audit.leaf_bound_violations << " with more leaves than f(root), "
      << audit.sum_violations << " nodes with f(G1) + f(G2) > f(G)";
    return {audit.trees > 0 && audit.leaf_bound_violations == 0 && audit.sum_violations == 0, d.str()};
}

Result criterion7() {
    const std::vector<int> sizes = {125, 250, 500, 1000};
    const int reps = 3;
    std::vector<double> median;
    std::vector<std::size_t> actual;
    bool all_in = true;
    for (int n : sizes) {
        std::vector<double> t;
        std::size_t order = 0;
        for (int r = 0; r < reps; ++r) {
            Rng rng(static_cast<std::uint64_t>(n) * 31 + static_cast<std::uint64_t>(r));
            Graph g = random_in_class_graph(n, rng);
            order = static_cast<std::size_t>(g.order());
            auto t0 = Clock::now();
            Verdict v = recognize(g);
            t.push_back(seconds_since(t0));
            all_in = all_in && v.long_unichord_free;
        }
        std::sort(t.begin(), t.end());
        median.push_back(t[static_cast<std::size_t>(reps / 2)]);
        actual.push_back(order);
    }
    // Least-squares slope of log t against log n, and an n^6 curve through
    // the smallest size scaled by the median ratio over all sizes.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = static_cast<double>(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        double x = std::log(static_cast<double>(actual[i])), y = std::log(std::max(median[i], 1e-6));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    double c6 = median[0] / std::pow(static_cast<double>(actual[0]), 6.0);
    bool below = true;
    for (std::size_t i = 1; i < sizes.size(); ++i)
        below = below && median[i] <= c6 * std::pow(static_cast<double>(actual[i]), 6.0);
    std::ostringstream d;
    d << "median seconds";
    for (std::size_t i = 0; i < sizes.size(); ++i) d << " n=" << actual[i] << ": " << median[i];
    d << "; fitted exponent " << slope << ", n^6 curve through n=" << actual[0] << " " << (below ? "not exceeded" : "EXCEEDED");
    return {all_in && median.back() <= 60 && below && slope < 6, d.str()};
}

Result criterion8() {
    std::size_t bad = 0;
    for (int x = 0; x <= 20; ++x)
        if (f_k(1, x) != static_cast<std::uint64_t>(x)) ++bad;
    if (f_k(3, 2) != 4 || f_k(3, 3) != 10) ++bad;
    for (int kk = 1; kk <= 6; ++kk) {
        if (f_k(kk, 0) != 0 || f_k(kk, 1) != 1) ++bad;
        for (int x = 0; x <= 20; ++x) {
            std::uint64_t power = 1;
            for (int i = 0; i < kk; ++i) power *= static_cast<std::uint64_t>(x);
            if (f_k(kk, x) > power) ++bad;
        }
    }
    return {bad == 0, "f_1 = identity on 0..20, f_3(2) = " + std::to_string(f_k(3, 2)) + ", f_3(3) = " + std::to_string(f_k(3, 3)) +
                          ", f_k(x) <= x^k for k <= 6 and x <= 20, " + std::to_string(bad) + " violations"};
}

}  // namespace

int main() {
    auto guarded = [](int id, const std::string& title, auto&& fn) {
        try {
            report(id, title, fn());
        } catch (const std::exception& e) {
            report(id, title, {false, std::string("exception: ") + e.what()});
        }
    };
    guarded(1, "recognizer agrees with the brute-force oracle", criterion1);
    guarded(2, "anchor graphs", criterion2);
    CorpusTotals corpus;
    try {
        corpus = run_corpus();
    } catch (const std::exception& e) {
        corpus.errors = 1;
        corpus.first_errors.push_back(e.what());
    }
    guarded(3, "splitter validity and peel progress", [&] { return criterion3(corpus); });
    guarded(4, "colorings are proper and within f_3(omega)", [&] { return criterion4(corpus); });
    guarded(5, "Petersen graph", criterion5);
    guarded(6, "decomposition tree size", criterion6);
    guarded(7, "recognizer performance", criterion7);
    guarded(8, "f_k table", criterion8);
    bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.second.pass; });
    return all ? 0 : 1;
}
