#include "gnc/cli.hpp"

#include "gnc/enumerate.hpp"
#include "gnc/errors.hpp"
#include "gnc/extremal.hpp"
#include "gnc/families.hpp"
#include "gnc/io.hpp"
#include "gnc/json.hpp"
#include "gnc/parallel.hpp"
#include "gnc/solver.hpp"
#include "gnc/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace gnc::cli {

namespace {

struct InputFlags {
    std::string g6;
    std::string file;
    std::string format = "auto";
};

GraphFormat parse_format(const std::string& name)
{
    if (name == "auto") return GraphFormat::Auto;
    if (name == "graph6") return GraphFormat::Graph6;
    if (name == "edgelist") return GraphFormat::EdgeList;
    throw ParameterError("unknown format '" + name + "'");
}

std::vector<Graph> read_graphs(const InputFlags& f, std::istream& in)
{
    if (!f.g6.empty()) return {parse_graph6(f.g6)};
    const std::string text = f.file.empty() ? read_all(in) : read_file(f.file);
    auto graphs = parse_graphs(text, parse_format(f.format));
    if (graphs.empty()) throw ParseError("no graph in input", 0);
    return graphs;
}

void print_components(std::ostream& out, const Json& doc)
{
    const auto& comps = doc["components"];
    out << "components: " << comps.size();
    if (!comps.empty()) {
        out << " (size/minDegree";
        for (const auto& c : comps) out << " " << c["size"].get<int>() << "/" << c["minDegree"].get<int>();
        out << ")";
    }
    out << "\n";
}

void print_result(std::ostream& out, const Json& doc)
{
    out << "n=" << doc["n"].get<int>();
    if (!doc["g"].is_null()) out << " g=" << doc["g"].get<int>();
    out << " kind=" << doc["kind"].get<std::string>() << "\n";
    if (doc["value"].is_null()) {
        out << "value: NotExist (" << doc["reason"].get<std::string>() << ")\n";
    } else {
        out << "value: " << doc["value"].get<int>() << "\n";
        out << "certificate: " << doc["certificate"].dump() << "\n";
    }
    print_components(out, doc);
}

struct ComputeFlags {
    InputFlags input;
    int g = 0;
    std::string kind = "gnc";
    bool json = false;
};

int do_compute(const ComputeFlags& f, int threads, std::istream& in, std::ostream& out)
{
    const auto graphs = read_graphs(f.input, in);
    SolveOptions opts;
    opts.threads = threads;
    Json docs = Json::array();
    bool missing = false;
    for (const Graph& g : graphs) {
        Json doc;
        if (f.kind == "gnc") {
            doc = cut_result_json(g, f.g, "gnc", kappa_gnc(g, f.g, opts));
        } else if (f.kind == "extra") {
            doc = cut_result_json(g, f.g, "extra", kappa_extra(g, f.g, opts));
        } else if (f.kind == "edge-extra") {
            doc = edge_result_json(g, f.g, lambda_extra(g, f.g));
        } else if (f.kind == "kappa") {
            doc = kappa_json(g, kappa_classical(g));
        } else if (f.kind == "lambda") {
            doc = lambda_json(g, lambda_classical(g));
        } else {
            throw ParameterError("unknown kind '" + f.kind + "'");
        }
        missing = missing || doc["value"].is_null();
        docs.push_back(std::move(doc));
    }
    if (f.json) {
        out << (docs.size() == 1 ? docs[0] : docs).dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < docs.size(); ++i) {
            if (i) out << "\n";
            print_result(out, docs[i]);
        }
    }
    return missing ? exit_not_exist : exit_ok;
}

struct GenerateFlags {
    std::string family;
    FamilySpec spec;
    std::string format = "graph6";
    std::string sidecar;
    bool json = false;
};

void write_graph(std::ostream& out, const Graph& g, const std::string& format)
{
    if (format == "graph6") {
        out << emit_graph6(g) << "\n";
    } else if (format == "edgelist") {
        out << emit_edge_list(g);
    } else {
        throw ParameterError("unknown output format '" + format + "'");
    }
}

int do_generate(GenerateFlags f, std::ostream& out)
{
    const auto family = family_from_string(f.family);
    if (!family) throw ParameterError("unknown family '" + f.family + "'");
    f.spec.family = *family;
    const auto generated = generate(f.spec);
    Json doc;
    doc["family"] = to_string(*family);
    doc["graphs"] = Json::array();
    for (const auto& gen : generated) doc["graphs"].push_back(generated_json(gen));
    if (!f.sidecar.empty()) {
        std::ofstream side(f.sidecar);
        if (!side) throw std::runtime_error("cannot write " + f.sidecar);
        side << doc.dump(2) << "\n";
    }
    if (f.json) {
        out << doc.dump(2) << "\n";
        return exit_ok;
    }
    for (std::size_t i = 0; i < generated.size(); ++i) {
        if (i && f.format == "edgelist") out << "\n";
        write_graph(out, generated[i].graph, f.format);
    }
    return exit_ok;
}

struct VerifyFlags {
    std::string suite;
    int max_n = 0;
    bool json = false;
    std::string report;
};

void print_suite(std::ostream& out, const SuiteReport& r)
{
    out << "suite " << r.suite << " (max n " << r.max_n << "): " << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : r.checks) {
        const char* status = c.failures == 0 ? "PASS" : c.advisory ? "NOTE" : "FAIL";
        out << "  " << status << std::setw(10) << c.cases << " cases" << std::setw(7) << c.failures << " failed  "
            << c.name << "\n";
        for (const auto& x : c.counterexamples) {
            out << "        " << (x.graph.empty() ? "-" : x.graph);
            if (x.g >= 0) out << " g=" << x.g;
            out << "  " << x.detail << "\n";
        }
    }
}

int do_verify(const VerifyFlags& f, int threads, std::ostream& out)
{
    VerifyOptions opts;
    opts.max_n = f.max_n;
    opts.threads = threads;
    const auto reports = run_suites(f.suite, opts);
    bool passed = true;
    Json doc;
    doc["suites"] = Json::array();
    for (const auto& r : reports) {
        passed = passed && r.passed();
        doc["suites"].push_back(suite_json(r));
    }
    doc["passed"] = passed;
    if (!f.report.empty()) {
        std::ofstream file(f.report);
        if (!file) throw std::runtime_error("cannot write " + f.report);
        file << doc.dump(2) << "\n";
    }
    if (f.json) {
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& r : reports) print_suite(out, r);
    }
    return passed ? exit_ok : exit_error;
}

struct ExtremalFlags {
    std::string fn;
    int n = 0;
    int k = 0;
    int g = 1;
    std::string corpus;
    bool json = false;
    bool elapsed = false;
};

std::string value_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

int do_extremal(const ExtremalFlags& f, int threads, std::ostream& out)
{
    const auto fn = extremal_fn_from_string(f.fn);
    if (!fn) throw ParameterError("unknown extremal function '" + f.fn + "' (use s, f or g)");
    ExtremalOptions opts;
    opts.threads = threads;
    std::vector<Graph> corpus;
    if (!f.corpus.empty()) {
        corpus = parse_graphs(read_file(f.corpus), GraphFormat::Graph6);
        opts.corpus = &corpus;
    }
    const auto report = extremal_search(*fn, f.n, f.k, f.g, opts);
    const Json doc = extremal_json(report, f.elapsed);
    if (f.json) {
        out << doc.dump(2) << "\n";
        return exit_ok;
    }
    auto row = [&](const std::string& key, const std::string& value) {
        out << std::left << std::setw(22) << key << value << "\n";
    };
    row("function", std::string(to_string(report.fn)) + "(n,k) at g = " + std::to_string(report.g));
    row("n, k", std::to_string(report.n) + ", " + std::to_string(report.k));
    row("searched value", value_text(doc["searched_value"]));
    row("formula value", value_text(doc["formula_value"]) + "  [" + report.formula.note + "]");
    row("match", report.match ? "yes" : report.documented_mismatch ? "no (documented)" : "no");
    if (doc.contains("connected_only_value")) row("connected-only value", value_text(doc["connected_only_value"]));
    if (doc.contains("s_next_minus_one")) row("s(n,k+1) - 1", value_text(doc["s_next_minus_one"]));
    row("graphs scanned", std::to_string(report.graphs_scanned));
    if (f.elapsed) row("elapsed", std::to_string(report.elapsed_seconds) + " s");
    for (std::size_t i = 0; i < report.witnesses.size(); ++i) row(i ? "" : "witnesses", report.witnesses[i]);
    return exit_ok;
}

struct EnumerateFlags {
    int n = 0;
    bool connected = false;
    bool iso = false;
    bool trees = false;
    bool count = false;
    int edge_min = 0;
    int edge_max = -1;
    std::string format = "graph6";
};

int do_enumerate(const EnumerateFlags& f, std::ostream& out)
{
    std::uint64_t total = 0;
    bool first = true;
    auto emit = [&](const Graph& g) {
        ++total;
        if (f.count) return;
        if (!first && f.format == "edgelist") out << "\n";
        first = false;
        write_graph(out, g, f.format);
    };
    if (f.trees) {
        for (const Graph& t : enumerate_trees(f.n)) emit(t);
    } else {
        EnumerationOptions opts;
        opts.connected_only = f.connected;
        opts.dedupe_iso = f.iso;
        opts.edge_min = f.edge_min;
        opts.edge_max = f.edge_max;
        for_each_graph(f.n, opts, emit);
    }
    if (f.count) out << total << "\n";
    return exit_ok;
}

void add_input_flags(CLI::App* cmd, InputFlags& f)
{
    cmd->add_option("--g6", f.g6, "graph6 string");
    cmd->add_option("--file", f.file, "graph6 or edge-list file (stdin when omitted)");
    cmd->add_option("--format", f.format, "input format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"g-good-neighbor connectivity toolkit", "gnc"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: GNC_THREADS or 1)");

    ComputeFlags compute;
    auto* c = app.add_subcommand("compute", "kappa^g, kappa_g, lambda_g, kappa or lambda of a graph");
    add_input_flags(c, compute.input);
    c->add_option("--g", compute.g, "g");
    c->add_option("--kind", compute.kind, "quantity")
        ->check(CLI::IsMember({"gnc", "extra", "edge-extra", "kappa", "lambda"}));
    c->add_flag("--json", compute.json, "JSON output");

    GenerateFlags generate_flags;
    auto* gen = app.add_subcommand("generate", "build a family graph with its expected values");
    gen->add_option("--family", generate_flags.family, "family tag")->required();
    gen->add_option("--n", generate_flags.spec.n, "order");
    gen->add_option("--t", generate_flags.spec.t, "t (T_n*)");
    gen->add_option("--k", generate_flags.spec.k, "k");
    gen->add_option("--g", generate_flags.spec.g, "g");
    gen->add_option("--a", generate_flags.spec.a, "a");
    gen->add_option("--b", generate_flags.spec.b, "b");
    gen->add_option("--f1", generate_flags.spec.f1_order, "order of F1 (fkn)");
    gen->add_option("--parts", generate_flags.spec.parts, "part sizes, comma separated")->delimiter(',');
    gen->add_option("--format", generate_flags.format, "output format")->check(CLI::IsMember({"graph6", "edgelist"}));
    gen->add_option("--sidecar", generate_flags.sidecar, "write the expected-values JSON here");
    gen->add_flag("--json", generate_flags.json, "print the JSON document instead of the graph");

    VerifyFlags verify_flags;
    auto* ver = app.add_subcommand("verify", "run an exhaustive invariant suite");
    ver->add_option("--suite", verify_flags.suite, "suite name or 'all'")->required();
    ver->add_option("--max-n", verify_flags.max_n, "largest order (default per suite)");
    ver->add_flag("--json", verify_flags.json, "print the JSON report instead of the table");
    ver->add_option("--report", verify_flags.report, "also write the JSON report here");

    ExtremalFlags extremal_flags;
    auto* ext = app.add_subcommand("extremal", "search s(n,k), f(n,k) or g(n,k)");
    ext->add_option("--fn", extremal_flags.fn, "s, f or g")->required();
    ext->add_option("--n", extremal_flags.n, "order")->required();
    ext->add_option("--k", extremal_flags.k, "k")->required();
    ext->add_option("--g", extremal_flags.g, "g");
    ext->add_option("--corpus", extremal_flags.corpus, "graph6 file replacing internal enumeration");
    ext->add_flag("--json", extremal_flags.json, "JSON output");
    ext->add_flag("--elapsed", extremal_flags.elapsed, "report wall time (breaks byte-identical output)");

    EnumerateFlags enumerate_flags;
    auto* en = app.add_subcommand("enumerate", "list graphs or trees of a given order");
    en->add_option("--n", enumerate_flags.n, "order")->required();
    en->add_flag("--connected", enumerate_flags.connected, "connected graphs only");
    en->add_flag("--iso", enumerate_flags.iso, "one graph per isomorphism class");
    en->add_flag("--trees", enumerate_flags.trees, "trees up to isomorphism (Pruefer sequences)");
    en->add_option("--edge-min", enumerate_flags.edge_min, "fewest edges");
    en->add_option("--edge-max", enumerate_flags.edge_max, "most edges");
    en->add_flag("--count", enumerate_flags.count, "print only the number of graphs");
    en->add_option("--format", enumerate_flags.format, "output format")->check(CLI::IsMember({"graph6", "edgelist"}));

    for (auto* sub : {c, gen, ver, ext, en}) sub->fallthrough();

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }
    if (threads < 1) threads = default_thread_count();

    try {
        if (c->parsed()) return do_compute(compute, threads, in, out);
        if (gen->parsed()) return do_generate(generate_flags, out);
        if (ver->parsed()) return do_verify(verify_flags, threads, out);
        if (ext->parsed()) return do_extremal(extremal_flags, threads, out);
        if (en->parsed()) return do_enumerate(enumerate_flags, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}

} // namespace gnc::cli
