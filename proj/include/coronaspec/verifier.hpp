#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coronaspec/corona.hpp"
#include "coronaspec/generators.hpp"
#include "coronaspec/predictor.hpp"

namespace coronaspec {

/// Result of one prediction-vs-eigensolver run on a single corona instance.
struct VerificationReport {
    CoronaMode mode = CoronaMode::vertex;
    std::string instance;
    double tol = 1e-8;
    bool predictor_applicable = false;
    std::string refusal_reason;  // nonempty iff the closed form was refused
    double max_abs_err = std::numeric_limits<double>::infinity();
    bool matched = false;
    std::string first_mismatch_part;  // diagnostic, set only when unmatched
    SpectrumMultiset oracle;
    std::optional<PredictedSpectrum> predicted;
};

/// Pairwise normalized Laplacian cospectrality certificate. For regular
/// pairs of equal degree the adjacency spectra are compared too, and the
/// two answers are required to agree (they are related by an affine map);
/// disagreement can only come from an eigensolver inconsistency and throws.
struct CospectralityCertificate {
    Graph graph_a;
    Graph graph_b;
    SpectrumMultiset spectrum_a;
    SpectrumMultiset spectrum_b;
    bool cospectral = false;
    double max_abs_err = std::numeric_limits<double>::infinity();
    std::optional<bool> adjacency_cospectral;  // set for regular equal-degree pairs
    /// Cheap invariant screen: false = certainly non-isomorphic (an
    /// invariant separates them), true = identical labeled graphs,
    /// absent = the screen cannot tell.
    std::optional<bool> isomorphic_hint;
};

namespace detail {

inline std::vector<int> sorted_degree_sequence(const Graph& g) {
    std::vector<int> deg = g.degrees();
    std::sort(deg.begin(), deg.end());
    return deg;
}

inline std::vector<std::vector<char>> adjacency_flags(const Graph& g) {
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(g.vertex_count()),
                                       std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0));
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    return adj;
}

/// Per-vertex triangle counts (= edges inside each neighborhood), sorted.
inline std::vector<int> per_vertex_triangle_counts(const Graph& g) {
    const auto adj = adjacency_flags(g);
    const auto lists = g.adjacency_lists();
    std::vector<int> counts;
    counts.reserve(lists.size());
    for (const auto& nbrs : lists) {
        int t = 0;
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (adj[static_cast<std::size_t>(nbrs[i])][static_cast<std::size_t>(nbrs[j])]) ++t;
        counts.push_back(t);
    }
    std::sort(counts.begin(), counts.end());
    return counts;
}

/// Per-vertex counts of triangles lying wholly inside each neighborhood
/// (equivalently 4-cliques through the vertex), sorted. This separates
/// pairs that plain triangle counts cannot, e.g. two strongly regular
/// graphs with the same parameters but K3-union vs cycle neighborhoods.
inline std::vector<int> per_vertex_neighborhood_triangles(const Graph& g) {
    const auto adj = adjacency_flags(g);
    const auto lists = g.adjacency_lists();
    std::vector<int> counts;
    counts.reserve(lists.size());
    for (const auto& nbrs : lists) {
        int t = 0;
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (!adj[static_cast<std::size_t>(nbrs[i])][static_cast<std::size_t>(nbrs[j])]) continue;
                for (std::size_t l = j + 1; l < nbrs.size(); ++l)
                    if (adj[static_cast<std::size_t>(nbrs[i])][static_cast<std::size_t>(nbrs[l])] &&
                        adj[static_cast<std::size_t>(nbrs[j])][static_cast<std::size_t>(nbrs[l])])
                        ++t;
            }
        counts.push_back(t);
    }
    std::sort(counts.begin(), counts.end());
    return counts;
}

inline std::optional<bool> isomorphism_screen(const Graph& a, const Graph& b) {
    if (a == b) return true;
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (sorted_degree_sequence(a) != sorted_degree_sequence(b)) return false;
    if (per_vertex_triangle_counts(a) != per_vertex_triangle_counts(b)) return false;
    if (per_vertex_neighborhood_triangles(a) != per_vertex_neighborhood_triangles(b)) return false;
    return std::nullopt;  // invariants agree; isomorphism undecided
}

/// Finds the first prediction part whose values are not all close to some
/// unused oracle value. Greedy nearest matching; diagnostic only, the
/// pass/fail verdict comes from the sorted multiset comparison.
inline std::string first_mismatch_part(const PredictedSpectrum& predicted,
                                       const SpectrumMultiset& oracle, double tol) {
    std::vector<double> pool = oracle.values;  // sorted
    std::vector<char> used(pool.size(), 0);
    auto consume_nearest = [&](double v) -> double {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_idx = pool.size();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (used[i]) continue;
            const double dist = std::abs(pool[i] - v);
            if (dist < best) {
                best = dist;
                best_idx = i;
            }
        }
        if (best_idx < pool.size()) used[best_idx] = 1;
        return best;
    };
    auto part_error = [&](const std::vector<double>& values) {
        double worst = 0.0;
        for (double v : values) worst = std::max(worst, consume_nearest(v));
        return worst;
    };

    if (part_error(predicted.shifted_attachment) > tol) return "shifted_delta";
    std::vector<double> repeated;
    for (int rep = 0; rep < predicted.repeated_multiplicity; ++rep)
        for (double v : predicted.repeated_values) repeated.push_back(v);
    if (part_error(repeated) > tol) return "repeated";
    std::vector<double> cubic;
    for (const auto& roots : predicted.cubic_roots)
        for (double v : roots) cubic.push_back(v);
    if (part_error(cubic) > tol) return "cubic";
    return "cardinality";
}

inline std::string default_instance_label(CoronaMode mode, const Graph& g,
                                          std::span<const Graph> hs) {
    std::string label = std::string(to_string(mode)) + "-corona, base(n=" +
                        std::to_string(g.vertex_count()) + ", m=" +
                        std::to_string(g.edge_count()) + "), attachments[";
    for (std::size_t i = 0; i < hs.size(); ++i) {
        if (i > 0) label += ",";
        if (i == 4 && hs.size() > 5) {
            label += "...";
            break;
        }
        label += std::to_string(hs[i].vertex_count());
    }
    label += "]";
    return label;
}

}  // namespace detail

/// Full pipeline check on one instance: build the corona, eigensolve its
/// normalized Laplacian, run the closed-form prediction, compare sorted
/// multisets. Heterogeneous attachments are accepted; the closed form is
/// then refused and the report carries the oracle spectrum only.
inline VerificationReport verify_prediction(CoronaMode mode, const Graph& g,
                                            std::span<const Graph> hs, double tol = 1e-8,
                                            std::string instance = "") {
    RegularGraphSpec base;
    try {
        base = RegularGraphSpec::from_graph(g);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("verify_prediction: base graph: ") + e.what());
    }
    for (std::size_t i = 0; i < hs.size(); ++i) {
        try {
            if (!check_regular(hs[i]).connected)
                throw std::invalid_argument("must be connected");
        } catch (const std::exception& e) {
            throw std::invalid_argument("verify_prediction: attachment " + std::to_string(i) +
                                        ": " + e.what());
        }
    }

    const auto layout = mode == CoronaMode::vertex ? subdivision_vertex_corona(g, hs)
                                                   : subdivision_edge_corona(g, hs);

    VerificationReport report;
    report.mode = mode;
    report.tol = tol;
    report.instance =
        instance.empty() ? detail::default_instance_label(mode, g, hs) : std::move(instance);
    report.oracle = symmetric_eigenvalues(normalized_laplacian(layout.graph));

    // All attachments are regular and nonempty here, so uniformity is a
    // plain (order, degree) comparison.
    bool uniform = true;
    for (std::size_t i = 1; i < hs.size(); ++i)
        if (hs[i].vertex_count() != hs[0].vertex_count() || hs[i].degree(0) != hs[0].degree(0))
            uniform = false;
    if (!uniform) {
        report.predictor_applicable = false;
        report.refusal_reason =
            "attachments are not uniform (mixed order or degree); the closed form couples "
            "attachment parameters to the base spectrum through a single index and does not "
            "apply";
        report.matched = false;
        return report;
    }

    report.predictor_applicable = true;
    const auto attach = AttachmentSpec::from_graphs(hs);
    report.predicted = mode == CoronaMode::vertex ? predict_vertex_corona(base, attach)
                                                  : predict_edge_corona(base, attach);
    report.max_abs_err = report.predicted->flattened.max_abs_difference(report.oracle);
    report.matched = report.predicted->flattened.size() == report.oracle.size() &&
                     report.max_abs_err <= tol;
    if (!report.matched)
        report.first_mismatch_part = detail::first_mismatch_part(*report.predicted, report.oracle, tol);
    return report;
}

inline VerificationReport verify_prediction(CoronaMode mode, const Graph& g, const Graph& h,
                                            double tol = 1e-8, std::string instance = "") {
    const int count = mode == CoronaMode::vertex ? g.vertex_count() : g.edge_count();
    std::vector<Graph> hs(static_cast<std::size_t>(count), h);
    return verify_prediction(mode, g, hs, tol, std::move(instance));
}

/// Compares the normalized Laplacian spectra of two graphs. Both graphs
/// must be free of isolated vertices. For regular pairs of equal degree the
/// adjacency spectra are cross-checked at a degree-scaled tolerance.
inline CospectralityCertificate check_cospectral(const Graph& a, const Graph& b,
                                                 double tol = 1e-8) {
    for (const auto* g : {&a, &b})
        for (int v = 0; v < g->vertex_count(); ++v)
            if (g->degree(v) == 0)
                throw std::invalid_argument("check_cospectral: isolated vertex " +
                                            std::to_string(v) +
                                            (g == &a ? " in first graph" : " in second graph"));

    CospectralityCertificate cert;
    cert.graph_a = a;
    cert.graph_b = b;
    cert.spectrum_a = symmetric_eigenvalues(normalized_laplacian(a));
    cert.spectrum_b = symmetric_eigenvalues(normalized_laplacian(b));
    cert.max_abs_err = cert.spectrum_a.max_abs_difference(cert.spectrum_b);
    cert.cospectral = cert.max_abs_err <= tol;

    const auto regular_degree = [](const Graph& g) -> std::optional<int> {
        const auto& deg = g.degrees();
        for (int d : deg)
            if (d != deg[0]) return std::nullopt;
        return deg.empty() ? 0 : deg[0];
    };
    const auto ra = regular_degree(a);
    const auto rb = regular_degree(b);
    if (ra && rb && *ra == *rb && *ra > 0) {
        const auto adj_a = symmetric_eigenvalues(adjacency_matrix(a));
        const auto adj_b = symmetric_eigenvalues(adjacency_matrix(b));
        // Adjacency eigenvalues are r(1 - lambda), so differences scale by r.
        const bool adj_match = adj_a.max_abs_difference(adj_b) <= tol * *ra;
        cert.adjacency_cospectral = adj_match;
        if (adj_match != cert.cospectral)
            throw std::runtime_error(
                "check_cospectral: normalized and adjacency cospectrality disagree on a regular "
                "equal-degree pair; this indicates an eigensolver inconsistency");
    }

    cert.isomorphic_hint = detail::isomorphism_screen(a, b);
    return cert;
}

/// Builds the two coronas of a cospectral pair of connected regular seeds
/// with a common uniform attachment and certifies the results cospectral.
/// The outputs are non-regular (attach points, subdivision vertices and
/// attachment vertices fall into distinct degree classes), which is the
/// point of the construction.
inline CospectralityCertificate cospectral_corona_pair(CoronaMode mode, const Graph& seed_a,
                                                       const Graph& seed_b, const Graph& h,
                                                       double tol = 1e-8) {
    RegularityCertificate cert_a, cert_b, cert_h;
    try {
        cert_a = check_regular(seed_a);
        cert_b = check_regular(seed_b);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("cospectral_corona_pair: seed: ") + e.what());
    }
    try {
        cert_h = check_regular(h);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("cospectral_corona_pair: attachment: ") +
                                    e.what());
    }
    if (!cert_a.connected || !cert_b.connected)
        throw std::invalid_argument("cospectral_corona_pair: seeds must be connected");
    if (cert_a.degree != cert_b.degree)
        throw std::invalid_argument("cospectral_corona_pair: seeds must share a degree, got " +
                                    std::to_string(cert_a.degree) + " and " +
                                    std::to_string(cert_b.degree));
    if (!cert_h.connected)
        throw std::invalid_argument("cospectral_corona_pair: attachment must be connected");
    if (!check_cospectral(seed_a, seed_b, tol).cospectral)
        throw std::invalid_argument("cospectral_corona_pair: seed pair is not cospectral");

    const auto corona_a = mode == CoronaMode::vertex ? subdivision_vertex_corona(seed_a, h)
                                                     : subdivision_edge_corona(seed_a, h);
    const auto corona_b = mode == CoronaMode::vertex ? subdivision_vertex_corona(seed_b, h)
                                                     : subdivision_edge_corona(seed_b, h);
    return check_cospectral(corona_a.graph, corona_b.graph, tol);
}

/// The standing verification battery: every combination of the named base
/// and attachment families, in both corona modes.
inline std::vector<VerificationReport> run_verification_battery(double tol = 1e-8) {
    const std::vector<std::pair<std::string, Graph>> bases = {
        {"cycle(3)", cycle(3)},     {"cycle(4)", cycle(4)},   {"cycle(5)", cycle(5)},
        {"cycle(6)", cycle(6)},     {"cycle(7)", cycle(7)},   {"cycle(8)", cycle(8)},
        {"complete(4)", complete(4)}, {"complete(5)", complete(5)},
        {"hypercube(3)", hypercube(3)}, {"petersen", petersen()}};
    const std::vector<std::pair<std::string, Graph>> attachments = {
        {"complete(2)", complete(2)},
        {"cycle(3)", cycle(3)},
        {"cycle(4)", cycle(4)},
        {"complete(4)", complete(4)}};

    std::vector<VerificationReport> reports;
    reports.reserve(bases.size() * attachments.size() * 2);
    for (CoronaMode mode : {CoronaMode::vertex, CoronaMode::edge})
        for (const auto& [base_name, base] : bases)
            for (const auto& [attach_name, attach] : attachments) {
                const std::string label = std::string(to_string(mode)) + " G=" + base_name +
                                          " H=" + attach_name;
                reports.push_back(verify_prediction(mode, base, attach, tol, label));
            }
    return reports;
}

}  // namespace coronaspec
