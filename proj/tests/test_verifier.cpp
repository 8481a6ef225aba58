#include <catch2/catch_amalgamated.hpp>

#include "coronaspec/generators.hpp"
#include "coronaspec/json_io.hpp"
#include "coronaspec/verifier.hpp"

using namespace coronaspec;

TEST_CASE("verify_prediction matches on uniform instances") {
    const auto vertex_report = verify_prediction(CoronaMode::vertex, cycle(4), complete(2));
    CHECK(vertex_report.predictor_applicable);
    CHECK(vertex_report.matched);
    CHECK(vertex_report.max_abs_err <= 1e-8);
    CHECK(vertex_report.oracle.size() == 16);

    const auto edge_report = verify_prediction(CoronaMode::edge, complete(4), complete(2));
    CHECK(edge_report.matched);
    REQUIRE(edge_report.predicted.has_value());
    CHECK(edge_report.predicted->repeated_multiplicity == 2);
}

TEST_CASE("verify_prediction refuses heterogeneous attachments but reports the oracle") {
    const std::vector<Graph> mixed = {complete(2), complete(2), cycle(3), cycle(3)};
    const auto report = verify_prediction(CoronaMode::vertex, cycle(4), mixed);
    CHECK_FALSE(report.predictor_applicable);
    CHECK_FALSE(report.matched);
    CHECK_FALSE(report.refusal_reason.empty());
    CHECK_FALSE(report.predicted.has_value());
    // The oracle side is still delivered: 4 + 4 + (2+2+3+3) vertices.
    CHECK(report.oracle.size() == 18);
    CHECK(report.oracle.values.front() >= -1e-9);
    CHECK(report.oracle.values.back() <= 2.0 + 1e-9);
}

TEST_CASE("verify_prediction propagates precondition failures with context") {
    CHECK_THROWS_WITH(verify_prediction(CoronaMode::vertex, path(3), complete(2)),
                      Catch::Matchers::ContainsSubstring("base graph"));
    const std::vector<Graph> bad = {complete(2), path(3), complete(2)};
    CHECK_THROWS_WITH(verify_prediction(CoronaMode::vertex, cycle(3), bad),
                      Catch::Matchers::ContainsSubstring("attachment 1"));
}

TEST_CASE("check_cospectral basics") {
    const auto same = check_cospectral(cycle(4), cycle(4));
    CHECK(same.cospectral);
    CHECK(same.max_abs_err == 0.0);
    REQUIRE(same.isomorphic_hint.has_value());
    CHECK(*same.isomorphic_hint);

    const auto different = check_cospectral(cycle(4), complete(4));
    CHECK_FALSE(different.cospectral);
    REQUIRE(different.isomorphic_hint.has_value());
    CHECK_FALSE(*different.isomorphic_hint);

    const auto isolated = Graph::from_edge_list(3, {{0, 1}});
    CHECK_THROWS_WITH(check_cospectral(isolated, cycle(3)),
                      Catch::Matchers::ContainsSubstring("isolated vertex"));
}

TEST_CASE("check_cospectral is symmetric") {
    for (const auto& [a, b] : {std::pair{shrikhande(), rook44()},
                               {cycle(5), cycle(6)},
                               {complete(4), petersen()}}) {
        const auto ab = check_cospectral(a, b);
        const auto ba = check_cospectral(b, a);
        CHECK(ab.cospectral == ba.cospectral);
        CHECK(ab.isomorphic_hint == ba.isomorphic_hint);
        CHECK(ab.adjacency_cospectral == ba.adjacency_cospectral);
        CHECK_THAT(ab.max_abs_err, Catch::Matchers::WithinAbs(ba.max_abs_err, 1e-12));
    }
}

TEST_CASE("shrikhande and rook44 are cospectral yet separated by the screen") {
    const auto cert = check_cospectral(shrikhande(), rook44());
    CHECK(cert.cospectral);
    CHECK(cert.max_abs_err <= 1e-8);
    REQUIRE(cert.adjacency_cospectral.has_value());
    CHECK(*cert.adjacency_cospectral);
    // Same degree sequence and triangle counts, but the triangles-inside-
    // the-neighborhood invariant separates them.
    REQUIRE(cert.isomorphic_hint.has_value());
    CHECK_FALSE(*cert.isomorphic_hint);
}

TEST_CASE("normalized vs adjacency equivalence on regular same-degree pairs") {
    const std::vector<std::pair<Graph, Graph>> pairs = {
        {shrikhande(), rook44()},
        {complete(4), complete(4)},
        {cycle(6), disjoint_union(cycle(3), cycle(3))},
        {cycle(5), cycle(6)},
        {complete(4), petersen()}};
    for (const auto& [a, b] : pairs) {
        const auto cert = check_cospectral(a, b);
        REQUIRE(cert.adjacency_cospectral.has_value());
        CHECK(*cert.adjacency_cospectral == cert.cospectral);
    }
}

TEST_CASE("cospectral_corona_pair certifies non-regular cospectral constructions") {
    auto non_regular = [](const Graph& g) {
        for (int d : g.degrees())
            if (d != g.degrees()[0]) return true;
        return false;
    };

    const auto vertex_cert =
        cospectral_corona_pair(CoronaMode::vertex, shrikhande(), rook44(), complete(2));
    CHECK(vertex_cert.cospectral);
    CHECK(vertex_cert.spectrum_a.size() == 96);  // 16 + 48 + 16*2
    CHECK(non_regular(vertex_cert.graph_a));
    CHECK(non_regular(vertex_cert.graph_b));

    // Trivial seed pair: identical graphs.
    const auto trivial = cospectral_corona_pair(CoronaMode::vertex, cycle(4), cycle(4), complete(2));
    CHECK(trivial.cospectral);

    // Non-cospectral seeds refuse.
    CHECK_THROWS_WITH(cospectral_corona_pair(CoronaMode::vertex, cycle(6),
                                             disjoint_union(cycle(3), cycle(3)), complete(2)),
                      Catch::Matchers::ContainsSubstring("connected"));
    CHECK_THROWS_WITH(cospectral_corona_pair(CoronaMode::vertex, cycle(4), cycle(6), complete(2)),
                      Catch::Matchers::ContainsSubstring("not cospectral"));
    CHECK_THROWS_WITH(cospectral_corona_pair(CoronaMode::vertex, cycle(4), complete(4), complete(2)),
                      Catch::Matchers::ContainsSubstring("share a degree"));
}

TEST_CASE("cospectral_corona_pair in edge mode") {
    const auto cert =
        cospectral_corona_pair(CoronaMode::edge, shrikhande(), rook44(), complete(2));
    CHECK(cert.cospectral);
    CHECK(cert.spectrum_a.size() == 160);  // 16 + 48 + 48*2
    CHECK(cert.max_abs_err <= 1e-8);
}

TEST_CASE("verification battery passes across the named families") {
    const auto reports = run_verification_battery();
    CHECK(reports.size() == 80);
    for (const auto& report : reports) {
        INFO(report.instance);
        CHECK(report.predictor_applicable);
        CHECK(report.matched);
    }
}

TEST_CASE("report and certificate JSON shapes") {
    const auto report = verify_prediction(CoronaMode::vertex, cycle(4), complete(2));
    const auto rj = to_json(report);
    CHECK(rj["mode"] == "vertex");
    CHECK(rj["matched"] == true);
    CHECK(rj["predicted"]["parts"].contains("shifted_delta"));
    CHECK(rj["predicted"]["parts"]["repeated"]["multiplicity"] == 0);
    CHECK(rj["oracle"]["order"] == 16);

    const std::vector<Graph> mixed = {complete(2), complete(2), cycle(3), cycle(3)};
    const auto refusal = verify_prediction(CoronaMode::vertex, cycle(4), mixed);
    const auto fj = to_json(refusal);
    CHECK(fj["predictor_applicable"] == false);
    CHECK(fj.contains("refusal_reason"));
    CHECK_FALSE(fj.contains("predicted"));

    const auto cert = check_cospectral(cycle(4), cycle(4));
    const auto cj = to_json(cert);
    CHECK(cj["cospectral"] == true);
    CHECK(cj["spectrum_a"]["order"] == 4);

    const auto layout = subdivision_vertex_corona(cycle(3), complete(2));
    const auto lj = to_json(layout);
    CHECK(lj["mode"] == "vertex");
    CHECK(lj["base_n"] == 3);
    CHECK(lj["blocks"].size() == 3);
    CHECK(lj["graph"]["n"] == 12);
}
