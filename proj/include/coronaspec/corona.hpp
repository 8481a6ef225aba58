#pragma once

#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coronaspec/dense_matrix.hpp"
#include "coronaspec/graph.hpp"

namespace coronaspec {

enum class CoronaMode { vertex, edge };

inline const char* to_string(CoronaMode mode) {
    return mode == CoronaMode::vertex ? "vertex" : "edge";
}

/// A constructed subdivision corona together with its frozen label layout:
///
///   [0, base_n)               original vertices of the base graph
///   [base_n, base_n+base_m)   one subdivision vertex per base edge, in
///                             canonical edge order
///   blocks[i]                 vertices of attachment i, contiguous, in
///                             attach-point order
///
/// Block-matrix assembly and the closed-form spectra are entrywise
/// statements about exactly this ordering, so it is part of the contract.
struct CoronaLayout {
    CoronaMode mode = CoronaMode::vertex;
    Graph graph;
    int base_n = 0;
    int base_m = 0;
    std::pair<int, int> subdivision_range{0, 0};
    std::vector<std::pair<int, int>> blocks;  // half-open label ranges

    // Inputs retained for block-matrix assembly and reporting.
    Graph base;
    std::vector<Graph> attachments;

    /// Vertex that attachment i is joined to: original vertex i in vertex
    /// mode, subdivision vertex base_n + i in edge mode.
    int attach_point(int i) const {
        return mode == CoronaMode::vertex ? i : base_n + i;
    }
};

namespace detail {

inline CoronaLayout build_corona(CoronaMode mode, const Graph& g, std::span<const Graph> hs) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m < 1) throw std::invalid_argument("corona: base graph needs at least one edge");
    const int attach_count = mode == CoronaMode::vertex ? n : m;
    if (static_cast<int>(hs.size()) != attach_count)
        throw std::invalid_argument("corona: expected " + std::to_string(attach_count) +
                                    " attachment graphs for " + to_string(mode) + " mode, got " +
                                    std::to_string(hs.size()));

    CoronaLayout layout;
    layout.mode = mode;
    layout.base_n = n;
    layout.base_m = m;
    layout.subdivision_range = {n, n + m};
    layout.base = g;
    layout.attachments.assign(hs.begin(), hs.end());

    std::vector<Graph::Edge> edges;
    for (int e = 0; e < m; ++e) {
        edges.emplace_back(g.edges()[static_cast<std::size_t>(e)].first, n + e);
        edges.emplace_back(g.edges()[static_cast<std::size_t>(e)].second, n + e);
    }
    int next = n + m;
    for (int i = 0; i < attach_count; ++i) {
        const Graph& h = hs[static_cast<std::size_t>(i)];
        if (h.vertex_count() < 1)
            throw std::invalid_argument("corona: attachment " + std::to_string(i) + " is empty");
        const int lo = next;
        next += h.vertex_count();
        layout.blocks.emplace_back(lo, next);
        for (const auto& [x, y] : h.edges()) edges.emplace_back(lo + x, lo + y);
        const int join = mode == CoronaMode::vertex ? i : n + i;
        for (int w = lo; w < next; ++w) edges.emplace_back(join, w);
    }
    layout.graph = Graph::from_edge_list(next, edges);
    return layout;
}

}  // namespace detail

/// Subdivide every edge of g, then join attachment hs[i] completely to
/// original vertex i. Needs one attachment per vertex of g; attachments may
/// be heterogeneous and non-regular. Resulting degrees: original vertex i
/// has deg_g(i) + |hs[i]|, subdivision vertices have 2, attachment vertices
/// their internal degree + 1.
inline CoronaLayout subdivision_vertex_corona(const Graph& g, std::span<const Graph> hs) {
    return detail::build_corona(CoronaMode::vertex, g, hs);
}

inline CoronaLayout subdivision_vertex_corona(const Graph& g, const Graph& h) {
    std::vector<Graph> hs(static_cast<std::size_t>(g.vertex_count()), h);
    return subdivision_vertex_corona(g, hs);
}

/// Subdivide every edge of g, then join attachment hs[i] completely to the
/// subdivision vertex of edge i (canonical edge order). Needs one
/// attachment per edge of g. Resulting degrees: original vertices keep
/// deg_g, subdivision vertex i has 2 + |hs[i]|, attachment vertices their
/// internal degree + 1.
inline CoronaLayout subdivision_edge_corona(const Graph& g, std::span<const Graph> hs) {
    return detail::build_corona(CoronaMode::edge, g, hs);
}

inline CoronaLayout subdivision_edge_corona(const Graph& g, const Graph& h) {
    std::vector<Graph> hs(static_cast<std::size_t>(g.edge_count()), h);
    return subdivision_edge_corona(g, hs);
}

/// Assembles the corona's normalized Laplacian directly from the block
/// structure, computing couplings from regularity instead of per-vertex
/// degrees:
///
///   original/subdivision  -1/sqrt(2(r+t_i))        (vertex mode)
///                         -1/sqrt(r(2+t_i))        (edge mode)
///   join couplings        -1/sqrt((r+t_i)(r_i+1))  (vertex mode)
///                         -1/sqrt((2+t_i)(r_i+1))  (edge mode)
///   attachment blocks     I - A(H_i)/(r_i+1)
///
/// where r is the base degree, t_i the attachment order and r_i the
/// attachment degree. Requires the base and every attachment to be regular;
/// equals normalized_laplacian(layout.graph) entrywise when they are.
inline DenseSymMatrix assemble_block_laplacian(const CoronaLayout& layout) {
    RegularityCertificate base_cert;
    try {
        base_cert = check_regular(layout.base);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("assemble_block_laplacian: base graph: ") +
                                    e.what());
    }
    const double r = base_cert.degree;

    std::vector<int> attach_degree(layout.attachments.size(), 0);
    for (std::size_t i = 0; i < layout.attachments.size(); ++i) {
        try {
            attach_degree[i] = check_regular(layout.attachments[i]).degree;
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("assemble_block_laplacian: attachment " +
                                        std::to_string(i) + ": " + e.what());
        }
    }

    const int n = layout.base_n;
    DenseSymMatrix lap(layout.graph.vertex_count());
    for (int v = 0; v < lap.order(); ++v) lap.set(v, v, 1.0);

    for (int e = 0; e < layout.base_m; ++e) {
        const auto& [u, v] = layout.base.edges()[static_cast<std::size_t>(e)];
        if (layout.mode == CoronaMode::vertex) {
            const double tu = layout.attachments[static_cast<std::size_t>(u)].vertex_count();
            const double tv = layout.attachments[static_cast<std::size_t>(v)].vertex_count();
            lap.set(u, n + e, -1.0 / std::sqrt(2.0 * (r + tu)));
            lap.set(v, n + e, -1.0 / std::sqrt(2.0 * (r + tv)));
        } else {
            const double te = layout.attachments[static_cast<std::size_t>(e)].vertex_count();
            const double coupling = -1.0 / std::sqrt(r * (2.0 + te));
            lap.set(u, n + e, coupling);
            lap.set(v, n + e, coupling);
        }
    }

    for (std::size_t i = 0; i < layout.blocks.size(); ++i) {
        const auto [lo, hi] = layout.blocks[i];
        const double t = hi - lo;
        const double rh = attach_degree[i];
        const double degree_sum = layout.mode == CoronaMode::vertex ? r + t : 2.0 + t;
        const double join_coupling = -1.0 / std::sqrt(degree_sum * (rh + 1.0));
        const int join = layout.attach_point(static_cast<int>(i));
        for (int w = lo; w < hi; ++w) lap.set(join, w, join_coupling);
        for (const auto& [x, y] : layout.attachments[i].edges())
            lap.set(lo + x, lo + y, -1.0 / (rh + 1.0));
    }
    return lap;
}

}  // namespace coronaspec
