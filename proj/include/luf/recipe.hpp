#pragma once

// Graphs described by JSON recipes. A recipe is an object of one of the
// forms
//
//   {"named": "petersen"}                         named_graph()
//   {"graph": {"n": 4, "edges": [[0, 1], ...]}}   literal graph
//   {"seed": "chordal", "size": 8}                random base-class seed
//   {"in-class": 200, "universal_probability": 0.02, ...}
//   {"compose": "amalgam", "g1": R, "g2": R, "marker1": 3, "marker2": 14}
//
// and may carry "offset": k, which adds k to every vertex identifier of the
// result. Random parts draw from one generator in document order, so a
// recipe and a seed determine the graph.

#include <string>

#include <json.hpp>

#include "luf/compose.hpp"
#include "luf/generate.hpp"
#include "luf/io.hpp"
#include "luf/named.hpp"

namespace luf {

inline SeedKind seed_kind_from_string(const std::string& s) {
    if (s == "chordal") return SeedKind::chordal;
    if (s == "sparse-bipartite") return SeedKind::sparse_bipartite;
    if (s == "petersen-sub") return SeedKind::petersen_sub;
    if (s == "heawood-sub") return SeedKind::heawood_sub;
    if (s == "odd-cycle") return SeedKind::odd_cycle;
    if (s == "clique") return SeedKind::clique;
    throw PreconditionError("unknown seed kind '" + s + "'");
}

namespace detail {

template <class T>
T recipe_field(const nlohmann::json& r, const char* key, T fallback) {
    if (!r.contains(key)) return fallback;
    try {
        return r.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw PreconditionError(std::string("recipe: bad value for \"") + key + "\"");
    }
}

inline Graph shift_ids(const Graph& g, VertexId offset) {
    std::vector<VertexId> ids;
    for (VertexId v : g.ids()) ids.push_back(v + offset);
    return relabel(g, ids);
}

}  // namespace detail

inline Graph graph_from_recipe(const nlohmann::json& r, Rng& rng) {
    if (!r.is_object()) throw PreconditionError("recipe: expected an object");
    Graph g;
    if (r.contains("named")) {
        g = named_graph(detail::recipe_field<std::string>(r, "named", ""));
    } else if (r.contains("graph")) {
        g = load_json(r.at("graph").dump()).graph;
    } else if (r.contains("seed")) {
        g = random_seed(seed_kind_from_string(detail::recipe_field<std::string>(r, "seed", "")),
                        detail::recipe_field<int>(r, "size", 8), rng);
    } else if (r.contains("in-class")) {
        InClassOptions o;
        o.min_seed = detail::recipe_field(r, "min_seed", o.min_seed);
        o.max_seed = detail::recipe_field(r, "max_seed", o.max_seed);
        o.amalgam_weight = detail::recipe_field(r, "amalgam_weight", o.amalgam_weight);
        o.universal_probability = detail::recipe_field(r, "universal_probability", o.universal_probability);
        o.max_universal = detail::recipe_field(r, "max_universal", o.max_universal);
        g = random_in_class_graph(detail::recipe_field<int>(r, "in-class", 0), rng, o);
    } else if (r.contains("compose")) {
        CompositionSpec spec;
        spec.kind = composition_kind_from_string(detail::recipe_field<std::string>(r, "compose", ""));
        spec.marker1 = detail::recipe_field<VertexId>(r, "marker1", -1);
        spec.marker2 = detail::recipe_field<VertexId>(r, "marker2", -1);
        spec.vertex = detail::recipe_field<VertexId>(r, "vertex", -1);
        if (!r.contains("g1")) throw PreconditionError("recipe: \"compose\" needs \"g1\"");
        Graph g1 = graph_from_recipe(r.at("g1"), rng);
        std::optional<Graph> g2;
        if (r.contains("g2")) g2 = graph_from_recipe(r.at("g2"), rng);
        g = compose(spec, g1, g2).graph;
    } else {
        throw PreconditionError("recipe: expected one of \"named\", \"graph\", \"seed\", \"in-class\", \"compose\"");
    }
    if (VertexId off = detail::recipe_field<VertexId>(r, "offset", 0)) g = detail::shift_ids(g, off);
    return g;
}

}  // namespace luf
