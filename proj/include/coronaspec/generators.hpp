#pragma once

#include <optional>
#include <string>

#include "coronaspec/graph.hpp"

namespace coronaspec {

inline Graph cycle(int length) {
    if (length < 3)
        throw std::invalid_argument("cycle: need at least 3 vertices, got " + std::to_string(length));
    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) edges.emplace_back(i, (i + 1) % length);
    return Graph::from_edge_list(length, edges);
}

inline Graph complete(int order) {
    if (order < 1)
        throw std::invalid_argument("complete: need at least 1 vertex, got " + std::to_string(order));
    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(order) * (order - 1) / 2);
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j) edges.emplace_back(i, j);
    return Graph::from_edge_list(order, edges);
}

inline Graph path(int order) {
    if (order < 1)
        throw std::invalid_argument("path: need at least 1 vertex, got " + std::to_string(order));
    std::vector<Graph::Edge> edges;
    for (int i = 0; i + 1 < order; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(order, edges);
}

inline Graph hypercube(int dimension) {
    if (dimension < 1 || dimension > 16)
        throw std::invalid_argument("hypercube: dimension must be in [1,16], got " +
                                    std::to_string(dimension));
    const int n = 1 << dimension;
    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * dimension / 2);
    for (int v = 0; v < n; ++v)
        for (int bit = 0; bit < dimension; ++bit) {
            const int w = v ^ (1 << bit);
            if (w > v) edges.emplace_back(v, w);
        }
    return Graph::from_edge_list(n, edges);
}

inline Graph petersen() {
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);                // spokes
    }
    return Graph::from_edge_list(10, edges);
}

/// Cayley graph on Z4 x Z4 with connection set +-{(1,0),(0,1),(1,1)};
/// 16 vertices, 6-regular.
inline Graph shrikhande() {
    auto id = [](int a, int b) { return 4 * (a & 3) + (b & 3); };
    std::vector<Graph::Edge> edges;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            edges.emplace_back(id(a, b), id(a + 1, b));
            edges.emplace_back(id(a, b), id(a, b + 1));
            edges.emplace_back(id(a, b), id(a + 1, b + 1));
        }
    return Graph::from_edge_list(16, edges);
}

/// Cartesian product K4 [] K4 (the 4x4 rook's graph); 16 vertices,
/// 6-regular, adjacency-cospectral with shrikhande() yet non-isomorphic.
inline Graph rook44() {
    auto id = [](int row, int col) { return 4 * row + col; };
    std::vector<Graph::Edge> edges;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            for (int c2 = c + 1; c2 < 4; ++c2) edges.emplace_back(id(r, c), id(r, c2));
            for (int r2 = r + 1; r2 < 4; ++r2) edges.emplace_back(id(r, c), id(r2, c));
        }
    return Graph::from_edge_list(16, edges);
}

/// Named-generator lookup backing the CLI's gen:<name>[:<param>] syntax.
inline Graph named_graph(const std::string& name, std::optional<int> param = std::nullopt) {
    auto need = [&](const char* what) {
        if (!param)
            throw std::invalid_argument("generator '" + name + "' needs a " + what + " parameter");
        return *param;
    };
    auto no_param = [&] {
        if (param) throw std::invalid_argument("generator '" + name + "' takes no parameter");
    };
    if (name == "cycle") return cycle(need("length"));
    if (name == "complete") return complete(need("order"));
    if (name == "path") return path(need("order"));
    if (name == "hypercube") return hypercube(need("dimension"));
    if (name == "petersen") { no_param(); return petersen(); }
    if (name == "shrikhande") { no_param(); return shrikhande(); }
    if (name == "rook44") { no_param(); return rook44(); }
    throw std::invalid_argument("unknown generator '" + name + "'");
}

}  // namespace coronaspec
