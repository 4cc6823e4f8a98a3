// luf: recognize, color, decompose and generate long-unichord-free graphs.

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "luf/luf.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
    std::string format = "json";
    std::uint64_t seed = 1;
    int oracle_max_n = 14;
    bool checked = false;
    unsigned jobs = 1;
    std::string out;
};

enum Exit : int { kOk = 0, kError = 1, kNotInClass = 2, kRejected = 3 };

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw luf::Error("cannot write " + cfg.out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (cfg.format == a) return;
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw luf::PreconditionError("--format " + cfg.format + " not supported here (use " + list + ")");
}

int cmd_recognize(const RunConfig& cfg, const std::string& path) {
    require_format(cfg, {"json", "text"});
    luf::Graph g = luf::load_graph_file(path).graph;
    luf::Verdict v = luf::recognize(g);
    if (cfg.format == "text") {
        std::string s = v.long_unichord_free ? "long-unichord-free\n" : "not long-unichord-free\n";
        if (v.witness) {
            s += "cycle:";
            for (luf::VertexId x : v.witness->cycle) s += " " + std::to_string(x);
            s += "\nchord: " + std::to_string(v.witness->chord.first) + " " + std::to_string(v.witness->chord.second) + "\n";
        }
        emit(cfg, s);
    } else {
        emit(cfg, dump(luf::to_json(v)));
    }
    return kOk;
}

int cmd_color(const RunConfig& cfg, const std::string& path) {
    require_format(cfg, {"json"});
    luf::Graph g = luf::load_graph_file(path).graph;
    luf::ColorOptions opt;
    opt.checked = cfg.checked;
    opt.peel_check_max_n = cfg.checked ? 20 : 0;
    try {
        emit(cfg, dump(luf::to_json(luf::color(g, opt))));
    } catch (const luf::NotInClass& e) {
        std::cerr << "luf: " << e.what() << "\n";
        return kNotInClass;
    }
    return kOk;
}

int cmd_decompose(const RunConfig& cfg, const std::string& path) {
    require_format(cfg, {"json", "dot"});
    luf::Graph g = luf::load_graph_file(path).graph;
    luf::Verdict v = luf::recognize(g);
    if (cfg.format == "dot") {
        emit(cfg, luf::to_dot(v.trees));
        return kOk;
    }
    json trees = json::array();
    for (const auto& t : v.trees) trees.push_back(luf::to_json(t));
    emit(cfg, dump({{"verdict", luf::to_json(v)}, {"trees", std::move(trees)}}));
    return kOk;
}

// "petersen", "cycle:7", or "<seed kind>:<size>", "in-class:<n>".
luf::Graph generate_named(const std::string& name, luf::Rng& rng) {
    auto colon = name.find(':');
    if (colon != std::string::npos) {
        std::string base = name.substr(0, colon);
        int size = 0;
        try {
            size = std::stoi(name.substr(colon + 1));
        } catch (const std::logic_error&) {
            throw luf::PreconditionError("bad size in '" + name + "'");
        }
        if (base == "in-class") return luf::random_in_class_graph(size, rng);
        if (base != "cycle" && base != "clique" && base != "path") return luf::random_seed(luf::seed_kind_from_string(base), size, rng);
    }
    return luf::named_graph(name);
}

int cmd_gen(const RunConfig& cfg, const std::vector<std::string>& args) {
    require_format(cfg, {"json", "dimacs"});
    luf::Rng rng(cfg.seed);
    luf::Graph g;
    if (args.size() == 2 && args[0] == "compose") {
        json recipe;
        try {
            recipe = json::parse(luf::read_file(args[1]));
        } catch (const json::parse_error& e) {
            throw luf::ParseError(std::string("recipe is not valid JSON: ") + e.what(), 1);
        }
        g = luf::graph_from_recipe(recipe, rng);
    } else if (args.size() == 1) {
        g = generate_named(args[0], rng);
    } else {
        throw luf::PreconditionError("usage: gen NAME | gen compose RECIPE");
    }
    emit(cfg, luf::emit_graph(g, luf::format_from_string(cfg.format)));
    return kOk;
}

int cmd_oracle(const RunConfig& cfg, const std::string& path) {
    require_format(cfg, {"json"});
    luf::Graph g = luf::load_graph_file(path).graph;
    const luf::OracleBounds& b = luf::default_oracle_bounds();
    json j{{"n", g.order()}, {"m", g.edge_count()}};
    auto w = luf::find_long_unichord(g, b);
    j["long_unichord_free"] = !w;
    if (w) j["witness"] = luf::to_json(*w);
    if (g.order() <= b.clique_max_n) j["omega"] = luf::clique_number_exact(g, b);
    if (g.order() <= b.chromatic_max_n) j["chi"] = luf::chromatic_number_exact(g, b).chi;
    if (g.order() <= b.perfect_max_n) j["perfect"] = luf::is_perfect_small(g, b);
    emit(cfg, dump(j));
    return kOk;
}

int cmd_verify_coloring(const RunConfig& cfg, const std::string& graph_path, const std::string& coloring_path) {
    require_format(cfg, {"json"});
    luf::Graph g = luf::load_graph_file(graph_path).graph;
    json doc;
    try {
        doc = json::parse(luf::read_file(coloring_path));
    } catch (const json::parse_error& e) {
        throw luf::ParseError(std::string("coloring is not valid JSON: ") + e.what(), 1);
    }
    auto a = luf::assignment_from_json(doc);
    std::optional<std::string> why = luf::coloring_violation(g, a);
    std::set<int> palette;
    for (auto [v, c] : a) {
        if (!why && !g.has_vertex(v)) why = "vertex " + std::to_string(v) + " is not in the graph";
        palette.insert(c);
    }
    const auto k = palette.size();
    if (!why && doc.contains("colors") && doc["colors"] != k) why = "\"colors\" does not match the assignment";
    if (!why && doc.contains("bound") && k > doc["bound"].get<std::uint64_t>()) why = "more colors than \"bound\"";
    json j{{"valid", !why}, {"colors", k}};
    if (why) j["reason"] = *why;
    emit(cfg, dump(j));
    return why ? kRejected : kOk;
}

template <class Task>
void run_parallel(std::size_t count, unsigned jobs, Task&& task) {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex m;
    for (unsigned t = 0; t < std::max(1u, jobs); ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < count;) {
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard lock(m);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

int cmd_bench(const RunConfig& cfg, const std::string& suite, int per_size) {
    require_format(cfg, {"json"});
    std::vector<int> sizes;
    if (suite == "recognize") sizes = {125, 250, 500, 1000};
    else if (suite == "color") sizes = {50, 100, 200, 400};
    else throw luf::PreconditionError("unknown bench suite '" + suite + "' (use recognize or color)");
    struct Row {
        int target = 0;
        std::size_t n = 0, m = 0;
        double seconds = 0;
        json extra;
    };
    std::vector<Row> rows(sizes.size() * static_cast<std::size_t>(per_size));
    run_parallel(rows.size(), cfg.jobs, [&](std::size_t i) {
        Row& r = rows[i];
        r.target = sizes[i / static_cast<std::size_t>(per_size)];
        luf::Rng rng(cfg.seed + i);
        luf::Graph g = luf::random_in_class_graph(r.target, rng);
        r.n = static_cast<std::size_t>(g.order());
        r.m = g.edge_count();
        auto t0 = std::chrono::steady_clock::now();
        if (suite == "recognize") {
            auto v = luf::recognize(g);
            r.extra = {{"in_class", v.long_unichord_free}, {"tree_nodes", v.totals.nodes}};
        } else {
            luf::ColorOptions opt;
            opt.checked = cfg.checked;
            auto c = luf::color(g, opt);
            r.extra = {{"colors", c.palette_size}, {"omega", c.omega}, {"bound", c.bound}};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    });
    json out = json::array();
    for (const Row& r : rows) {
        json j{{"target_n", r.target}, {"n", r.n}, {"m", r.m}, {"seconds", r.seconds}};
        j.update(r.extra);
        out.push_back(std::move(j));
    }
    emit(cfg, dump({{"suite", suite}, {"seed", cfg.seed}, {"runs", std::move(out)}}));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recognize and color long-unichord-free graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format: json, text, dot or dimacs (per command)");
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--oracle-max-n", cfg.oracle_max_n, "Largest graph for the brute-force cycle oracle")->check(CLI::PositiveNumber);
    app.add_flag("--checked", cfg.checked, "Verify every splitter and every peel");
    app.add_option("--jobs", cfg.jobs, "Parallel instances for bench")->check(CLI::PositiveNumber);
    app.add_option("--out", cfg.out, "Write output to this file instead of stdout");

    std::string file, second, suite;
    std::vector<std::string> gen_args;
    int per_size = 3;
    auto* recognize = app.add_subcommand("recognize", "Decide long-unichord-freeness");
    recognize->add_option("FILE", file, "Graph file (.json or DIMACS)")->required();
    auto* color = app.add_subcommand("color", "Color with at most f_3(omega) colors");
    color->add_option("FILE", file)->required();
    auto* decompose = app.add_subcommand("decompose", "Print the decomposition tree");
    decompose->add_option("FILE", file)->required();
    auto* gen = app.add_subcommand("gen", "Generate a graph: NAME, or compose RECIPE");
    gen->add_option("ARGS", gen_args)->required()->expected(1, 2);
    auto* oracle = app.add_subcommand("oracle", "Brute-force verdict, clique and chromatic number");
    oracle->add_option("FILE", file)->required();
    auto* verify = app.add_subcommand("verify-coloring", "Check a coloring against a graph");
    verify->add_option("GRAPH", file)->required();
    verify->add_option("COLORING", second)->required();
    auto* bench = app.add_subcommand("bench", "Time recognize or color on generated graphs");
    bench->add_option("SUITE", suite)->required();
    bench->add_option("--per-size", per_size, "Instances per size")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    luf::default_oracle_bounds().unichord_max_n = cfg.oracle_max_n;
    try {
        if (*recognize) return cmd_recognize(cfg, file);
        if (*color) return cmd_color(cfg, file);
        if (*decompose) return cmd_decompose(cfg, file);
        if (*gen) return cmd_gen(cfg, gen_args);
        if (*oracle) return cmd_oracle(cfg, file);
        if (*verify) return cmd_verify_coloring(cfg, file, second);
        if (*bench) return cmd_bench(cfg, suite, per_size);
    } catch (const luf::Error& e) {
        std::cerr << "luf: " << e.what() << "\n";
        return kError;
    } catch (const json::exception& e) {
        std::cerr << "luf: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
