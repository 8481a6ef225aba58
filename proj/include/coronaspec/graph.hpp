#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coronaspec {

/// Simple undirected graph on dense vertex labels 0..n-1.
///
/// The edge list is kept canonical: every edge stored as (u, v) with u < v,
/// sorted lexicographically, no duplicates, no self-loops. Canonical order
/// matters beyond tidiness: subdivision vertices and edge-attachment blocks
/// are labeled by edge index, so every derived construction in this library
/// depends on it.
class Graph {
public:
    using Edge = std::pair<int, int>;

    Graph() = default;

    /// Canonicalizing constructor. Accepts edges in any order and
    /// orientation; (u,v)/(v,u) doubles and exact duplicates collapse to a
    /// single edge. Throws std::invalid_argument on self-loops or labels
    /// outside [0, vertex_count).
    static Graph from_edge_list(int vertex_count, std::span<const Edge> pairs) {
        if (vertex_count < 0)
            throw std::invalid_argument("Graph: negative vertex count");
        std::vector<Edge> canon;
        canon.reserve(pairs.size());
        for (const auto& [a, b] : pairs) {
            if (a == b)
                throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(a));
            if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
                throw std::invalid_argument("Graph: edge (" + std::to_string(a) + "," +
                                            std::to_string(b) + ") out of range for n=" +
                                            std::to_string(vertex_count));
            canon.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(canon.begin(), canon.end());
        canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

        Graph g;
        g.vertex_count_ = vertex_count;
        g.edges_ = std::move(canon);
        g.degrees_.assign(vertex_count, 0);
        for (const auto& [u, v] : g.edges_) {
            ++g.degrees_[u];
            ++g.degrees_[v];
        }
        return g;
    }

    static Graph from_edge_list(int vertex_count, std::initializer_list<Edge> pairs) {
        return from_edge_list(vertex_count, std::span<const Edge>(pairs.begin(), pairs.size()));
    }

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int v) const { return degrees_.at(static_cast<std::size_t>(v)); }

    std::vector<std::vector<int>> adjacency_lists() const {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count_));
        for (const auto& [u, v] : edges_) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        return adj;
    }

    bool operator==(const Graph&) const = default;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
};

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    const auto adj = g.adjacency_lists();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == n;
}

struct RegularityCertificate {
    int degree = 0;
    bool connected = false;
};

/// Certifies that every vertex has the same degree, reporting connectivity
/// alongside so callers can enforce it where needed. Throws naming two
/// vertices with differing degrees otherwise.
inline RegularityCertificate check_regular(const Graph& g) {
    const auto& deg = g.degrees();
    for (std::size_t v = 1; v < deg.size(); ++v) {
        if (deg[v] != deg[0])
            throw std::invalid_argument("check_regular: not regular, vertex 0 has degree " +
                                        std::to_string(deg[0]) + " but vertex " +
                                        std::to_string(v) + " has degree " +
                                        std::to_string(deg[v]));
    }
    RegularityCertificate cert;
    cert.degree = deg.empty() ? 0 : deg[0];
    cert.connected = is_connected(g);
    return cert;
}

/// Replaces every edge by a length-2 path through a fresh vertex. The new
/// vertex for edge index e (canonical order) gets label n + e; the result
/// has n + m vertices and 2m edges and is bipartite between old and new.
inline Graph subdivision(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<Graph::Edge> out;
    out.reserve(2 * static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        const auto& [u, v] = g.edges()[static_cast<std::size_t>(e)];
        out.emplace_back(u, n + e);
        out.emplace_back(v, n + e);
    }
    return Graph::from_edge_list(n + m, out);
}

/// Graph on the edges of g; two edge-vertices are adjacent iff the
/// corresponding edges share an endpoint.
inline Graph line_graph(const Graph& g) {
    const int m = g.edge_count();
    std::vector<Graph::Edge> out;
    for (int e = 0; e < m; ++e) {
        const auto& [a, b] = g.edges()[static_cast<std::size_t>(e)];
        for (int f = e + 1; f < m; ++f) {
            const auto& [c, d] = g.edges()[static_cast<std::size_t>(f)];
            if (a == c || a == d || b == c || b == d) out.emplace_back(e, f);
        }
    }
    return Graph::from_edge_list(m, out);
}

/// The 2m (vertex, edge_index) incidences defining the 0/1 incidence
/// matrix R with R[v][e] = 1 iff v is an endpoint of edge e.
inline std::vector<std::pair<int, int>> incidence_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(2 * g.edges().size());
    for (int e = 0; e < g.edge_count(); ++e) {
        pairs.emplace_back(g.edges()[static_cast<std::size_t>(e)].first, e);
        pairs.emplace_back(g.edges()[static_cast<std::size_t>(e)].second, e);
    }
    return pairs;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Graph::Edge> out = a.edges();
    out.reserve(out.size() + b.edges().size());
    for (const auto& [u, v] : b.edges())
        out.emplace_back(a.vertex_count() + u, a.vertex_count() + v);
    return Graph::from_edge_list(a.vertex_count() + b.vertex_count(), out);
}

}  // namespace coronaspec
