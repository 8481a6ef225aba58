#pragma once

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "coronaspec/eigensolver.hpp"
#include "coronaspec/graph.hpp"
#include "coronaspec/graph_matrices.hpp"
#include "coronaspec/roots.hpp"
#include "coronaspec/spectrum.hpp"

namespace coronaspec {

/// Degree/size/spectrum summary of a connected regular base graph.
struct RegularGraphSpec {
    int degree = 0;
    int vertex_count = 0;
    int edge_count = 0;
    SpectrumMultiset spectrum;  // normalized Laplacian eigenvalues, ascending

    static RegularGraphSpec from_graph(const Graph& g) {
        const auto cert = check_regular(g);
        if (!cert.connected)
            throw std::invalid_argument("RegularGraphSpec: graph must be connected");
        RegularGraphSpec spec;
        spec.degree = cert.degree;
        spec.vertex_count = g.vertex_count();
        spec.edge_count = g.edge_count();
        spec.spectrum = symmetric_eigenvalues(normalized_laplacian(g));
        return spec;
    }
};

/// Uniform family of connected regular attachment graphs: a common order
/// and degree, plus one normalized Laplacian spectrum per attach point.
/// The closed forms couple the attachment parameters to the base spectrum
/// through a single index, so they are only well-defined when order and
/// degree are shared; construction enforces that.
struct AttachmentSpec {
    int degree = 0;  // common attachment degree
    int order = 0;   // common attachment vertex count
    std::vector<SpectrumMultiset> spectra;

    static AttachmentSpec from_graphs(std::span<const Graph> hs) {
        if (hs.empty())
            throw std::invalid_argument("AttachmentSpec: need at least one attachment");
        AttachmentSpec spec;
        for (std::size_t i = 0; i < hs.size(); ++i) {
            const Graph& h = hs[i];
            RegularityCertificate cert;
            try {
                cert = check_regular(h);
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("AttachmentSpec: attachment " + std::to_string(i) +
                                            ": " + e.what());
            }
            if (!cert.connected)
                throw std::invalid_argument("AttachmentSpec: attachment " + std::to_string(i) +
                                            " must be connected");
            if (i == 0) {
                spec.degree = cert.degree;
                spec.order = h.vertex_count();
            } else if (cert.degree != spec.degree || h.vertex_count() != spec.order) {
                throw std::invalid_argument(
                    "AttachmentSpec: attachments are not uniform, attachment " +
                    std::to_string(i) + " has (order " + std::to_string(h.vertex_count()) +
                    ", degree " + std::to_string(cert.degree) + ") vs (order " +
                    std::to_string(spec.order) + ", degree " + std::to_string(spec.degree) + ")");
            }
            spec.spectra.push_back(laplacian_spectrum(h));
        }
        return spec;
    }

    static AttachmentSpec replicate(const Graph& h, int count) {
        if (count < 1) throw std::invalid_argument("AttachmentSpec: need a positive count");
        const auto cert = check_regular(h);
        if (!cert.connected)
            throw std::invalid_argument("AttachmentSpec: attachment must be connected");
        AttachmentSpec spec;
        spec.degree = cert.degree;
        spec.order = h.vertex_count();
        spec.spectra.assign(static_cast<std::size_t>(count), laplacian_spectrum(h));
        return spec;
    }

private:
    static SpectrumMultiset laplacian_spectrum(const Graph& h) {
        // A single vertex has normalized Laplacian spectrum {0}; the
        // general assembly refuses isolated vertices, so special-case it.
        if (h.vertex_count() == 1) return SpectrumMultiset::from_values({0.0});
        return symmetric_eigenvalues(normalized_laplacian(h));
    }
};

/// Closed-form corona spectrum, grouped by provenance:
///   shifted_attachment   (1 + r_h d)/(r_h + 1) over the attachment
///                        eigenvalues d, one zero dropped per attachment
///   repeated_values      the flat part: {1} in vertex mode, the two
///                        quadratic roots in edge mode, each with
///                        multiplicity m - n
///   cubic_roots          three roots per base eigenvalue
struct PredictedSpectrum {
    std::vector<double> shifted_attachment;
    std::vector<double> repeated_values;
    int repeated_multiplicity = 0;
    std::vector<std::array<double, 3>> cubic_roots;
    SpectrumMultiset flattened;
};

/// Cubic whose three roots are the per-base-eigenvalue spectrum members of
/// a subdivision-vertex corona: the cleared-denominator form of
///   (x-1)(x-1-chi(x)) + r(mu-2)/(2(r+t)) = 0.
inline std::array<double, 4> vertex_corona_cubic(int base_degree, int attach_order,
                                                 int attach_degree, double base_eigenvalue) {
    const double r = base_degree;
    const double t = attach_order;
    const double s = r + t;             // attach-point degree sum
    const double q = attach_degree + 1.0;
    const double mu = base_eigenvalue;
    return {2.0 * s * q,
            -2.0 * s * (2.0 * q + 1.0),
            2.0 * s * (q + 2.0) - 2.0 * t + r * q * (mu - 2.0),
            -r * mu};
}

/// Quadratic behind the repeated flat part of a subdivision-edge corona:
/// the cleared-denominator form of x - 1 - chi(x) = 0.
inline std::array<double, 3> edge_corona_quadratic(int attach_order, int attach_degree) {
    const double t = attach_order;
    const double q = attach_degree + 1.0;
    return {(2.0 + t) * q, -(2.0 + t) * (q + 1.0), 2.0};
}

/// Cubic for the per-base-eigenvalue part of a subdivision-edge corona:
/// the cleared-denominator form of (x-1)(x-1-chi(x)) - (2-mu)/(2+t) = 0.
inline std::array<double, 4> edge_corona_cubic(int attach_order, int attach_degree,
                                               double base_eigenvalue) {
    const double t = attach_order;
    const double q = attach_degree + 1.0;
    const double mu = base_eigenvalue;
    return {(2.0 + t) * q,
            -(2.0 + t) * (2.0 * q + 1.0),
            (2.0 + t) * (q + 2.0) - t - (2.0 - mu) * q,
            -mu};
}

/// Scalar value of the attachment Schur-complement term
///   chi(x) = t / (s (r_h + 1) (x - 1/(r_h + 1)))
/// for a regular attachment of order t and degree r_h, where s is the
/// attach-point degree sum: r + t in vertex mode, 2 + t in edge mode.
inline double coronal_chi(int attach_degree, int attach_order, double attach_degree_sum,
                          double x) {
    const double pole = 1.0 / (attach_degree + 1.0);
    if (std::abs(x - pole) < 1e-12)
        throw std::domain_error("coronal_chi: evaluation at the pole x = 1/(attach_degree+1)");
    if (attach_order == 0) return 0.0;
    return attach_order / (attach_degree_sum * (attach_degree + 1.0) * (x - pole));
}

namespace detail {

/// Part (1) of both closed forms: per attachment, drop the single zero
/// eigenvalue (simple, since attachments are connected) and shift the rest
/// by d -> (1 + r_h d)/(r_h + 1).
inline std::vector<double> shifted_attachment_values(const AttachmentSpec& attach) {
    std::vector<double> out;
    const double q = attach.degree + 1.0;
    for (std::size_t i = 0; i < attach.spectra.size(); ++i) {
        const auto& values = attach.spectra[i].values;
        if (values.empty() || std::abs(values.front()) > 1e-8)
            throw std::invalid_argument("attachment spectrum " + std::to_string(i) +
                                        " does not start at zero; attachment is not a valid "
                                        "connected normalized Laplacian spectrum");
        for (std::size_t j = 1; j < values.size(); ++j)
            out.push_back((1.0 + attach.degree * values[j]) / q);
    }
    return out;
}

inline SpectrumMultiset flatten(const PredictedSpectrum& parts) {
    std::vector<double> all = parts.shifted_attachment;
    for (int rep = 0; rep < parts.repeated_multiplicity; ++rep)
        for (double v : parts.repeated_values) all.push_back(v);
    for (const auto& roots : parts.cubic_roots)
        for (double v : roots) all.push_back(v);
    return SpectrumMultiset::from_values(std::move(all));
}

}  // namespace detail

/// Closed-form normalized Laplacian spectrum of the subdivision-vertex
/// corona of a connected regular base with one uniform regular attachment
/// per base vertex. The flattened multiset has n + m + n*t members.
inline PredictedSpectrum predict_vertex_corona(const RegularGraphSpec& base,
                                               const AttachmentSpec& attach) {
    if (static_cast<int>(attach.spectra.size()) != base.vertex_count)
        throw std::invalid_argument("predict_vertex_corona: need one attachment spectrum per "
                                    "base vertex (" + std::to_string(base.vertex_count) +
                                    "), got " + std::to_string(attach.spectra.size()));
    const int extra = base.edge_count - base.vertex_count;
    if (extra < 0)
        throw std::invalid_argument(
            "predict_vertex_corona: base graph has fewer edges than vertices; the repeated part "
            "would have negative multiplicity");

    PredictedSpectrum out;
    out.shifted_attachment = detail::shifted_attachment_values(attach);
    out.repeated_values = {1.0};
    out.repeated_multiplicity = extra;
    out.cubic_roots.reserve(base.spectrum.size());
    for (double mu : base.spectrum.values) {
        const auto [a, b, c, d] = vertex_corona_cubic(base.degree, attach.order, attach.degree, mu);
        out.cubic_roots.push_back(real_roots_cubic(a, b, c, d));
    }
    out.flattened = detail::flatten(out);
    return out;
}

/// Closed-form normalized Laplacian spectrum of the subdivision-edge corona
/// of a connected regular base with one uniform regular attachment per base
/// edge. The flattened multiset has n + m + m*t members.
inline PredictedSpectrum predict_edge_corona(const RegularGraphSpec& base,
                                             const AttachmentSpec& attach) {
    if (static_cast<int>(attach.spectra.size()) != base.edge_count)
        throw std::invalid_argument("predict_edge_corona: need one attachment spectrum per "
                                    "base edge (" + std::to_string(base.edge_count) + "), got " +
                                    std::to_string(attach.spectra.size()));
    const int extra = base.edge_count - base.vertex_count;
    if (extra < 0)
        throw std::invalid_argument(
            "predict_edge_corona: base graph has fewer edges than vertices; the repeated part "
            "would have negative multiplicity");

    PredictedSpectrum out;
    out.shifted_attachment = detail::shifted_attachment_values(attach);
    const auto [qa, qb, qc] = edge_corona_quadratic(attach.order, attach.degree);
    const auto quad_roots = real_roots_quadratic(qa, qb, qc);
    out.repeated_values = {quad_roots[0], quad_roots[1]};
    out.repeated_multiplicity = extra;
    out.cubic_roots.reserve(base.spectrum.size());
    for (double mu : base.spectrum.values) {
        const auto [a, b, c, d] = edge_corona_cubic(attach.order, attach.degree, mu);
        out.cubic_roots.push_back(real_roots_cubic(a, b, c, d));
    }
    out.flattened = detail::flatten(out);
    return out;
}

}  // namespace coronaspec
