#pragma once

#include <json.hpp>

#include "coronaspec/acceptance.hpp"
#include "coronaspec/corona.hpp"
#include "coronaspec/predictor.hpp"
#include "coronaspec/spectrum.hpp"
#include "coronaspec/verifier.hpp"

namespace coronaspec {

// ordered_json keeps keys in insertion order so documents diff cleanly.
using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const SpectrumMultiset& s) {
    return ordered_json{{"order", s.size()}, {"eigenvalues", s.values}};
}

inline ordered_json to_json(const Graph& g) {
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(ordered_json::array({u, v}));
    return ordered_json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
}

inline ordered_json to_json(const CoronaLayout& layout) {
    ordered_json blocks = ordered_json::array();
    for (const auto& [lo, hi] : layout.blocks) blocks.push_back(ordered_json::array({lo, hi}));
    return ordered_json{{"mode", to_string(layout.mode)},
                        {"base_n", layout.base_n},
                        {"base_m", layout.base_m},
                        {"blocks", blocks},
                        {"graph", to_json(layout.graph)}};
}

inline ordered_json to_json(const PredictedSpectrum& p) {
    ordered_json cubic = ordered_json::array();
    for (const auto& roots : p.cubic_roots)
        cubic.push_back(ordered_json::array({roots[0], roots[1], roots[2]}));
    return ordered_json{
        {"parts",
         ordered_json{{"shifted_delta", p.shifted_attachment},
                      {"repeated", ordered_json{{"values", p.repeated_values},
                                                {"multiplicity", p.repeated_multiplicity}}},
                      {"cubic", cubic}}},
        {"flattened", p.flattened.values}};
}

inline ordered_json to_json(const VerificationReport& r) {
    ordered_json j{{"mode", to_string(r.mode)},
                   {"instance", r.instance},
                   {"tol", r.tol},
                   {"predictor_applicable", r.predictor_applicable},
                   {"matched", r.matched}};
    if (!r.predictor_applicable) {
        j["refusal_reason"] = r.refusal_reason;
    } else {
        j["max_abs_err"] = r.max_abs_err;  // infinity serializes as null
    }
    if (!r.first_mismatch_part.empty()) j["first_mismatch_part"] = r.first_mismatch_part;
    j["oracle"] = to_json(r.oracle);
    if (r.predicted) j["predicted"] = to_json(*r.predicted);
    return j;
}

inline ordered_json to_json(const CospectralityCertificate& c) {
    ordered_json j{{"cospectral", c.cospectral},
                   {"max_abs_err", c.max_abs_err},
                   {"spectrum_a", to_json(c.spectrum_a)},
                   {"spectrum_b", to_json(c.spectrum_b)}};
    j["adjacency_cospectral"] =
        c.adjacency_cospectral ? ordered_json(*c.adjacency_cospectral) : ordered_json(nullptr);
    j["isomorphic_hint"] =
        c.isomorphic_hint ? ordered_json(*c.isomorphic_hint) : ordered_json(nullptr);
    return j;
}

inline ordered_json to_json(const CriterionResult& c) {
    return ordered_json{{"id", c.id},
                        {"name", c.name},
                        {"passed", c.passed},
                        {"detail", c.detail},
                        {"elapsed_seconds", c.elapsed_seconds}};
}

inline ordered_json to_json(const AcceptanceResult& r) {
    ordered_json criteria = ordered_json::array();
    for (const auto& c : r.criteria) criteria.push_back(to_json(c));
    ordered_json reports = ordered_json::array();
    for (const auto& rep : r.verification_reports) reports.push_back(to_json(rep));
    return ordered_json{{"tol", r.tol},
                        {"all_passed", r.all_passed()},
                        {"criteria", criteria},
                        {"verification_reports", reports}};
}

}  // namespace coronaspec
