#pragma once

#include <cmath>

#include "coronaspec/dense_matrix.hpp"
#include "coronaspec/graph.hpp"

namespace coronaspec {

inline DenseSymMatrix adjacency_matrix(const Graph& g) {
    DenseSymMatrix a(g.vertex_count());
    for (const auto& [u, v] : g.edges()) a.set(u, v, 1.0);
    return a;
}

/// Normalized Laplacian I - D^{-1/2} A D^{-1/2}: unit diagonal and
/// -1/sqrt(d_u d_v) on every edge. Undefined on isolated vertices.
inline DenseSymMatrix normalized_laplacian(const Graph& g) {
    const auto& deg = g.degrees();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (deg[static_cast<std::size_t>(v)] == 0)
            throw std::invalid_argument("normalized_laplacian: isolated vertex " +
                                        std::to_string(v) + " (degree 0)");
    DenseSymMatrix lap(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) lap.set(v, v, 1.0);
    for (const auto& [u, v] : g.edges()) {
        const double du = deg[static_cast<std::size_t>(u)];
        const double dv = deg[static_cast<std::size_t>(v)];
        lap.set(u, v, -1.0 / std::sqrt(du * dv));
    }
    return lap;
}

}  // namespace coronaspec
