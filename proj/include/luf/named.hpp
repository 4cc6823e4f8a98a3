#pragma once

#include <string>
#include <string_view>

#include "luf/error.hpp"
#include "luf/graph.hpp"

namespace luf {

inline Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

inline Graph path_graph(int n) {
    if (n < 1) throw PreconditionError("path needs at least 1 vertex");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph clique_graph(int n) {
    if (n < 1) throw PreconditionError("clique needs at least 1 vertex");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
inline Graph petersen_graph() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, e);
}

/// LCF notation [5,-5]^7 on the 14-cycle.
inline Graph heawood_graph() {
    std::vector<Edge> e;
    for (int i = 0; i < 14; ++i) {
        e.emplace_back(i, (i + 1) % 14);
        if (i % 2 == 0) e.emplace_back(i, (i + 5) % 14);
    }
    return Graph::from_edges(14, e);
}

/// a,b,c,d,e = 0..4 with edges ab, bc, cd, da, ea, eb.
inline Graph house_graph() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}});
}

/// K4 minus the edge 2-3.
inline Graph diamond_graph() {
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

/// Accepts "petersen", "heawood", "house", "diamond", and "cycle(n)" / "cycle:n"
/// style names for cycle, clique and path.
inline Graph named_graph(std::string_view name) {
    if (name == "petersen") return petersen_graph();
    if (name == "heawood") return heawood_graph();
    if (name == "house") return house_graph();
    if (name == "diamond") return diamond_graph();
    auto open = name.find_first_of("(:");
    if (open != std::string_view::npos) {
        std::string_view base = name.substr(0, open);
        std::string_view arg = name.substr(open + 1);
        if (!arg.empty() && arg.back() == ')') arg.remove_suffix(1);
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(std::string(arg), &used);
            if (used != arg.size()) throw std::invalid_argument("trailing");
        } catch (const std::logic_error&) {
            throw PreconditionError("bad size in graph name '" + std::string(name) + "'");
        }
        if (base == "cycle") return cycle_graph(n);
        if (base == "clique") return clique_graph(n);
        if (base == "path") return path_graph(n);
    }
    throw PreconditionError("unknown graph name '" + std::string(name) + "'");
}

}  // namespace luf
