// coronaspec: build subdivision coronas of regular graphs, compute
// normalized Laplacian spectra by eigensolver and by closed form, and
// cross-verify the two. Exit codes: 0 success, 1 verification mismatch,
// 2 usage or input error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coronaspec/acceptance.hpp"
#include "coronaspec/corona.hpp"
#include "coronaspec/edge_list_io.hpp"
#include "coronaspec/generators.hpp"
#include "coronaspec/json_io.hpp"
#include "coronaspec/predictor.hpp"
#include "coronaspec/verifier.hpp"

namespace {

using namespace coronaspec;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

/// Graph arguments are either a file path or gen:<name>[:<param>],
/// e.g. gen:cycle:6 or gen:shrikhande.
Graph load_graph_arg(const std::string& arg) {
    if (arg.rfind("gen:", 0) == 0) {
        const std::string rest = arg.substr(4);
        const auto colon = rest.find(':');
        const std::string name = rest.substr(0, colon);
        std::optional<int> param;
        if (colon != std::string::npos) {
            const std::string text = rest.substr(colon + 1);
            try {
                std::size_t used = 0;
                param = std::stoi(text, &used);
                if (used != text.size()) throw std::invalid_argument(text);
            } catch (const std::exception&) {
                throw std::invalid_argument("generator parameter '" + text +
                                            "' is not an integer in '" + arg + "'");
            }
        }
        return named_graph(name, param);
    }
    return read_edge_list_file(arg);
}

/// Attachment list for one corona: either <dir>/H_1.el .. <dir>/H_k.el, or
/// the single -H graph replicated k times.
std::vector<Graph> load_attachments(CoronaMode mode, const Graph& base,
                                    const std::string& h_arg, const std::string& per_attach_dir) {
    const int count = mode == CoronaMode::vertex ? base.vertex_count() : base.edge_count();
    std::vector<Graph> hs;
    hs.reserve(static_cast<std::size_t>(count));
    if (!per_attach_dir.empty()) {
        for (int i = 1; i <= count; ++i) {
            const auto file = std::filesystem::path(per_attach_dir) / ("H_" + std::to_string(i) + ".el");
            hs.push_back(read_edge_list_file(file));
        }
        return hs;
    }
    if (h_arg.empty())
        throw std::invalid_argument("need an attachment graph: pass -H or --per-attach");
    hs.assign(static_cast<std::size_t>(count), load_graph_arg(h_arg));
    return hs;
}

CoronaMode parse_mode(const std::string& mode) {
    if (mode == "vertex") return CoronaMode::vertex;
    if (mode == "edge") return CoronaMode::edge;
    throw std::invalid_argument("mode must be 'vertex' or 'edge', got '" + mode + "'");
}

void print_spectrum_text(std::ostream& out, const SpectrumMultiset& s) {
    out << "order " << s.size() << "\neigenvalues:\n";
    for (double v : s.values) out << "  " << fmt(v) << '\n';
}

void print_prediction_text(std::ostream& out, const PredictedSpectrum& p) {
    out << "shifted attachment part (" << p.shifted_attachment.size() << " values):\n";
    for (double v : p.shifted_attachment) out << "  " << fmt(v) << '\n';
    out << "repeated part (multiplicity " << p.repeated_multiplicity << "):\n";
    for (double v : p.repeated_values) out << "  " << fmt(v) << '\n';
    out << "cubic part (" << p.cubic_roots.size() << " triples):\n";
    for (const auto& roots : p.cubic_roots)
        out << "  " << fmt(roots[0]) << "  " << fmt(roots[1]) << "  " << fmt(roots[2]) << '\n';
    out << "flattened (" << p.flattened.size() << " values):\n";
    for (double v : p.flattened.values) out << "  " << fmt(v) << '\n';
}

void print_report_text(std::ostream& out, const VerificationReport& r) {
    out << "mode        " << to_string(r.mode) << '\n';
    out << "instance    " << r.instance << '\n';
    out << "order       " << r.oracle.size() << '\n';
    if (!r.predictor_applicable) {
        out << "predictor   refused: " << r.refusal_reason << '\n';
        out << "oracle spectrum:\n";
        for (double v : r.oracle.values) out << "  " << fmt(v) << '\n';
        return;
    }
    out << "max |error| " << fmt(r.max_abs_err) << '\n';
    out << "matched     " << (r.matched ? "yes" : "no") << " (tol " << fmt(r.tol) << ")\n";
    if (!r.matched && !r.first_mismatch_part.empty())
        out << "first mismatching part: " << r.first_mismatch_part << '\n';
}

struct Options {
    std::string mode;
    std::string g_arg;
    std::string h_arg;
    std::string a_arg;
    std::string b_arg;
    std::string per_attach;
    std::string out_file;
    double tol = 1e-8;
    bool json = false;
};

int run_build(const Options& opt) {
    const auto mode = parse_mode(opt.mode);
    const auto base = load_graph_arg(opt.g_arg);
    const auto hs = load_attachments(mode, base, opt.h_arg, opt.per_attach);
    const auto layout = mode == CoronaMode::vertex ? subdivision_vertex_corona(base, hs)
                                                   : subdivision_edge_corona(base, hs);
    write_edge_list_file(opt.out_file, layout.graph);
    if (opt.json) {
        std::cout << to_json(layout).dump(2) << '\n';
    } else {
        std::cout << "wrote " << opt.out_file << ": " << layout.graph.vertex_count()
                  << " vertices, " << layout.graph.edge_count() << " edges ("
                  << to_string(layout.mode) << " corona of n=" << layout.base_n
                  << ", m=" << layout.base_m << " base)\n";
    }
    return 0;
}

int run_spectrum(const Options& opt) {
    const auto g = load_graph_arg(opt.g_arg);
    const auto spectrum = symmetric_eigenvalues(normalized_laplacian(g));
    if (opt.json)
        std::cout << to_json(spectrum).dump() << '\n';
    else
        print_spectrum_text(std::cout, spectrum);
    return 0;
}

int run_predict(const Options& opt) {
    const auto mode = parse_mode(opt.mode);
    const auto base_graph = load_graph_arg(opt.g_arg);
    const auto base = RegularGraphSpec::from_graph(base_graph);
    const int count = mode == CoronaMode::vertex ? base.vertex_count : base.edge_count;
    AttachmentSpec attach;
    if (!opt.per_attach.empty()) {
        const auto hs = load_attachments(mode, base_graph, opt.h_arg, opt.per_attach);
        attach = AttachmentSpec::from_graphs(hs);
    } else {
        if (opt.h_arg.empty())
            throw std::invalid_argument("need an attachment graph: pass -H or --per-attach");
        attach = AttachmentSpec::replicate(load_graph_arg(opt.h_arg), count);
    }
    const auto predicted = mode == CoronaMode::vertex ? predict_vertex_corona(base, attach)
                                                      : predict_edge_corona(base, attach);
    if (opt.json)
        std::cout << to_json(predicted).dump(2) << '\n';
    else
        print_prediction_text(std::cout, predicted);
    return 0;
}

int run_verify(const Options& opt) {
    const auto mode = parse_mode(opt.mode);
    const auto base = load_graph_arg(opt.g_arg);
    const auto hs = load_attachments(mode, base, opt.h_arg, opt.per_attach);
    const std::string label = opt.per_attach.empty()
                                  ? "G=" + opt.g_arg + ", H=" + opt.h_arg
                                  : "G=" + opt.g_arg + ", H from " + opt.per_attach;
    const auto report = verify_prediction(mode, base, hs, opt.tol, label);
    if (opt.json)
        std::cout << to_json(report).dump(2) << '\n';
    else
        print_report_text(std::cout, report);
    return report.matched ? 0 : 1;
}

int run_cospectral(const Options& opt) {
    const auto a = load_graph_arg(opt.a_arg);
    const auto b = load_graph_arg(opt.b_arg);
    const auto cert = check_cospectral(a, b, opt.tol);
    if (opt.json) {
        std::cout << to_json(cert).dump(2) << '\n';
    } else {
        std::cout << "cospectral  " << (cert.cospectral ? "yes" : "no") << " (tol "
                  << fmt(opt.tol) << ")\n";
        std::cout << "max |error| " << fmt(cert.max_abs_err) << '\n';
        if (cert.adjacency_cospectral)
            std::cout << "adjacency   " << (*cert.adjacency_cospectral ? "cospectral" : "different")
                      << '\n';
        if (cert.isomorphic_hint)
            std::cout << "isomorphic  " << (*cert.isomorphic_hint ? "yes (identical)" : "no")
                      << '\n';
        else
            std::cout << "isomorphic  undecided by invariant screen\n";
    }
    return cert.cospectral ? 0 : 1;
}

int run_battery(const Options& opt) {
    const auto result = run_acceptance(opt.tol);
    if (opt.json)
        std::cout << to_json(result).dump(2) << '\n';
    else
        print_acceptance(std::cout, result);
    return result.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"normalized Laplacian spectra of subdivision coronas of regular graphs"};
    app.require_subcommand(1);
    Options opt;

    const std::string graph_help = "graph: edge-list file or gen:<name>[:<param>] "
                                   "(cycle, complete, path, hypercube, petersen, shrikhande, rook44)";

    auto* build = app.add_subcommand("build", "construct a corona and write its edge list");
    build->add_option("--mode", opt.mode, "vertex | edge")->required();
    build->add_option("-g,--base", opt.g_arg, graph_help)->required();
    build->add_option("-H,--attach", opt.h_arg, "uniform attachment graph");
    build->add_option("--per-attach", opt.per_attach,
                      "directory with H_1.el .. H_k.el for heterogeneous attachments");
    build->add_option("-o,--out", opt.out_file, "output edge-list file")->required();
    build->add_flag("--json", opt.json, "print the corona layout as JSON");

    auto* spectrum = app.add_subcommand("spectrum", "normalized Laplacian spectrum of a graph");
    spectrum->add_option("-g,--graph", opt.g_arg, graph_help)->required();
    spectrum->add_flag("--json", opt.json, "machine-readable output");

    auto* predict = app.add_subcommand("predict", "closed-form corona spectrum");
    predict->add_option("--mode", opt.mode, "vertex | edge")->required();
    predict->add_option("-g,--base", opt.g_arg, graph_help)->required();
    predict->add_option("-H,--attach", opt.h_arg, "uniform attachment graph");
    predict->add_option("--per-attach", opt.per_attach,
                        "directory with H_1.el .. H_k.el (must be uniform)");
    predict->add_flag("--json", opt.json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "closed form vs eigensolver on one instance");
    verify->add_option("--mode", opt.mode, "vertex | edge")->required();
    verify->add_option("-g,--base", opt.g_arg, graph_help)->required();
    verify->add_option("-H,--attach", opt.h_arg, "uniform attachment graph");
    verify->add_option("--per-attach", opt.per_attach,
                       "directory with H_1.el .. H_k.el for heterogeneous attachments");
    verify->add_option("--tol", opt.tol, "matching tolerance (default 1e-8)");
    verify->add_flag("--json", opt.json, "machine-readable output");

    auto* cospectral = app.add_subcommand("cospectral", "compare two normalized Laplacian spectra");
    cospectral->add_option("-a", opt.a_arg, graph_help)->required();
    cospectral->add_option("-b", opt.b_arg, graph_help)->required();
    cospectral->add_option("--tol", opt.tol, "matching tolerance (default 1e-8)");
    cospectral->add_flag("--json", opt.json, "machine-readable output");

    auto* battery = app.add_subcommand("battery", "run the full acceptance battery");
    battery->add_option("--tol", opt.tol, "spectrum-matching tolerance (default 1e-8)");
    battery->add_flag("--json", opt.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // 0 covers --help/--version
    }

    try {
        if (app.got_subcommand(build)) return run_build(opt);
        if (app.got_subcommand(spectrum)) return run_spectrum(opt);
        if (app.got_subcommand(predict)) return run_predict(opt);
        if (app.got_subcommand(verify)) return run_verify(opt);
        if (app.got_subcommand(cospectral)) return run_cospectral(opt);
        if (app.got_subcommand(battery)) return run_battery(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
