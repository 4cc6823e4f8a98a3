#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "luf/graph.hpp"

namespace luf {

/// A pair of disjoint cliques (K_in, K_plus) whose union is a clique.
struct Constraint {
    VertexSet k_in;
    VertexSet k_plus;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

inline std::optional<std::string> constraint_violation(const Graph& g, const Constraint& c) {
    for (VertexId v : set_union(c.k_in, c.k_plus))
        if (!g.has_vertex(v)) return "constraint vertex " + std::to_string(v) + " not in graph";
    if (intersects(c.k_in, c.k_plus)) return "K_in and K_plus intersect";
    if (!is_clique_set(g, set_union(c.k_in, c.k_plus))) return "K_in u K_plus is not a clique";
    return std::nullopt;
}

inline nlohmann::json to_json(const Constraint& c) { return {{"K_in", c.k_in}, {"K_plus", c.k_plus}}; }

}  // namespace luf
