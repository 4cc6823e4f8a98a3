#pragma once

// Graph file formats.
//
//   DIMACS: "p edge n m" header, "e u v" edge lines, "c ..." comments.
//           Vertices are numbered 1..n and keep that numbering as identifiers.
//   JSON:   {"n": n, "edges": [[u, v], ...]} with vertices 0..n-1.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "luf/error.hpp"
#include "luf/graph.hpp"

namespace luf {

enum class GraphFormat { dimacs, json };

inline GraphFormat format_from_string(std::string_view s) {
    if (s == "dimacs" || s == "col") return GraphFormat::dimacs;
    if (s == "json") return GraphFormat::json;
    throw PreconditionError("unknown graph format '" + std::string(s) + "'");
}

/// Guess the format from a file name (".json" means JSON, anything else DIMACS).
inline GraphFormat format_from_path(std::string_view path) {
    return path.size() >= 5 && path.substr(path.size() - 5) == ".json" ? GraphFormat::json
                                                                        : GraphFormat::dimacs;
}

struct LoadedGraph {
    Graph graph;
    std::size_t duplicate_edges = 0;  ///< parallel edges that were merged
};

namespace detail {

inline LoadedGraph build_loaded(VertexSet ids, std::vector<Edge> edges) {
    std::set<Edge> seen;
    std::vector<Edge> unique;
    std::size_t dup = 0;
    for (auto [u, v] : edges) {
        Edge key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second) {
            ++dup;
            continue;
        }
        unique.push_back(key);
    }
    return {Graph::from_edges(std::move(ids), unique), dup};
}

inline long long parse_int(std::string_view tok, std::size_t line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(std::string(tok), &used);
        if (used != tok.size()) throw ParseError("bad integer '" + std::string(tok) + "'", line);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("bad integer '" + std::string(tok) + "'", line);
    }
}

}  // namespace detail

inline LoadedGraph load_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    long long n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind, sn, sm;
            if (n >= 0) throw ParseError("duplicate problem line", lineno);
            if (!(ls >> kind >> sn >> sm)) throw ParseError("expected 'p edge n m'", lineno);
            if (kind != "edge" && kind != "col") throw ParseError("unsupported problem type '" + kind + "'", lineno);
            n = detail::parse_int(sn, lineno);
            long long m = detail::parse_int(sm, lineno);
            if (n < 0 || m < 0) throw ParseError("negative size in problem line", lineno);
            std::string extra;
            if (ls >> extra) throw ParseError("trailing tokens in problem line", lineno);
            continue;
        }
        if (tag == "e") {
            if (n < 0) throw ParseError("edge before problem line", lineno);
            std::string su, sv, extra;
            if (!(ls >> su >> sv)) throw ParseError("expected 'e u v'", lineno);
            if (ls >> extra) throw ParseError("trailing tokens in edge line", lineno);
            long long u = detail::parse_int(su, lineno);
            long long v = detail::parse_int(sv, lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("vertex out of range 1.." + std::to_string(n), lineno);
            if (u == v) throw ParseError("loop at vertex " + std::to_string(u), lineno);
            edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
            continue;
        }
        throw ParseError("unknown line type '" + tag + "'", lineno);
    }
    if (n < 0) throw ParseError("missing problem line", lineno);
    VertexSet ids;
    for (long long i = 1; i <= n; ++i) ids.push_back(static_cast<VertexId>(i));
    return detail::build_loaded(std::move(ids), std::move(edges));
}

inline LoadedGraph load_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t pos = std::min<std::size_t>(e.byte, text.size());
        std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos > 0 ? pos - 1 : 0), '\n'));
        throw ParseError(std::string("invalid JSON at byte ") + std::to_string(e.byte), line);
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("expected object with integer field \"n\"", 1);
    long long n = j["n"].get<long long>();
    if (n < 0) throw ParseError("negative \"n\"", 1);
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array", 1);
        std::size_t k = 0;
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw ParseError("edge #" + std::to_string(k) + " must be [u, v]", 1);
            long long u = e[0].get<long long>();
            long long v = e[1].get<long long>();
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError("edge #" + std::to_string(k) + " has a vertex out of range", 1);
            if (u == v) throw ParseError("loop at vertex " + std::to_string(u), 1);
            edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
            ++k;
        }
    }
    VertexSet ids;
    for (long long i = 0; i < n; ++i) ids.push_back(static_cast<VertexId>(i));
    return detail::build_loaded(std::move(ids), std::move(edges));
}

inline LoadedGraph load_graph(std::string_view bytes, GraphFormat format) {
    return format == GraphFormat::json ? load_json(bytes) : load_dimacs(bytes);
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline LoadedGraph load_graph_file(const std::string& path) {
    return load_graph(read_file(path), format_from_path(path));
}

/// DIMACS text. The i-th smallest identifier is written as i+1.
inline std::string emit_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (int i = 0; i < g.order(); ++i)
        for (int j : g.neighbors(i))
            if (i < j) out << "e " << i + 1 << ' ' << j + 1 << '\n';
    return out.str();
}

/// JSON text. The i-th smallest identifier is written as i.
inline std::string emit_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (int i = 0; i < g.order(); ++i)
        for (int j : g.neighbors(i))
            if (i < j) edges.push_back({i, j});
    nlohmann::json j;
    j["n"] = g.order();
    j["edges"] = std::move(edges);
    return j.dump() + "\n";
}

inline std::string emit_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::json ? emit_json(g) : emit_dimacs(g);
}

}  // namespace luf
