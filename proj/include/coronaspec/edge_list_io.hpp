#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "coronaspec/graph.hpp"

namespace coronaspec {

/// Reads the edge-list text format used across the toolkit:
///   first data line:   n m
///   then m data lines: u v         (0-based vertex labels)
/// Blank lines are skipped and a line whose first non-space character is
/// '#' is a comment. Errors carry "<source>:<line>: <reason>".
inline Graph read_edge_list(std::istream& in, const std::string& source) {
    auto fail = [&](int line_no, const std::string& msg) {
        throw std::runtime_error(source + ":" + std::to_string(line_no) + ": " + msg);
    };

    int line_no = 0;
    int n = -1, m = -1;
    std::vector<Graph::Edge> edges;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;

        std::istringstream fields(line);
        std::string extra;
        if (n < 0) {
            if (!(fields >> n >> m) || n < 0 || m < 0)
                fail(line_no, "expected header 'n m' with nonnegative counts");
            if (fields >> extra) fail(line_no, "trailing tokens after header");
        } else {
            if (static_cast<int>(edges.size()) == m)
                fail(line_no, "more than the declared " + std::to_string(m) + " edges");
            int u = 0, v = 0;
            if (!(fields >> u >> v)) fail(line_no, "expected edge 'u v'");
            if (fields >> extra) fail(line_no, "trailing tokens after edge");
            edges.emplace_back(u, v);
        }
    }
    if (n < 0) fail(line_no, "missing 'n m' header");
    if (static_cast<int>(edges.size()) != m)
        fail(line_no, "expected " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));
    try {
        return Graph::from_edge_list(n, edges);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(source + ": " + e.what());
    }
}

inline Graph read_edge_list_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read " + file.string());
    return read_edge_list(in, file.string());
}

/// Writes the canonical edge list (u < v, lexicographic order).
inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline void write_edge_list_file(const std::filesystem::path& file, const Graph& g) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    write_edge_list(out, g);
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + file.string());
}

}  // namespace coronaspec
