#include "gnc/json.hpp"

#include "gnc/io.hpp"

namespace gnc {

namespace {

Json optional_int(std::optional<int> v) { return v ? Json(*v) : Json(nullptr); }

Json components_json(const ComponentSummary& s)
{
    Json out = Json::array();
    for (const auto& c : s.components) out.push_back({{"size", c.size}, {"minDegree", c.min_degree}});
    return out;
}

} // namespace

Json vertex_list(VertexSet s)
{
    Json out = Json::array();
    for (int v : s) out.push_back(v);
    return out;
}

Json cut_result_json(const Graph& g, int good, std::string_view kind, const CutOutcome<VertexSet>& r)
{
    Json out;
    out["n"] = g.order();
    out["g"] = good;
    out["kind"] = kind;
    if (r.exists()) {
        out["value"] = r.value();
        out["reason"] = nullptr;
        out["certificate"] = vertex_list(r.certificate());
        out["components"] = components_json(components_after_removal(g, r.certificate()));
    } else {
        out["value"] = nullptr;
        out["reason"] = to_string(r.reason());
        out["certificate"] = Json::array();
        out["components"] = components_json(components_after_removal(g, VertexSet{}));
    }
    return out;
}

Json edge_result_json(const Graph& g, int extra, const EdgeExtraResult& r)
{
    Json out;
    out["n"] = g.order();
    out["g"] = extra;
    out["kind"] = "edge-extra";
    GraphBuilder rest(g.order());
    for (auto [u, v] : g.edges()) rest.add_edge(u, v);
    if (r.exists()) {
        out["value"] = r.value();
        out["reason"] = nullptr;
        Json cert = Json::array();
        for (auto [u, v] : r.certificate()) {
            cert.push_back({u, v});
            rest.remove_edge(u, v);
        }
        out["certificate"] = cert;
    } else {
        out["value"] = nullptr;
        out["reason"] = to_string(r.reason());
        out["certificate"] = Json::array();
    }
    out["components"] = components_json(components_after_removal(rest.build(), VertexSet{}));
    return out;
}

Json kappa_json(const Graph& g, const ClassicalConnectivity& c)
{
    Json out;
    out["n"] = g.order();
    out["g"] = nullptr;
    out["kind"] = "kappa";
    out["value"] = optional_int(c.value);
    out["reason"] = c.disconnected_input ? Json("DisconnectedInput") : c.value ? Json(nullptr) : Json("CompleteGraph");
    out["certificate"] = vertex_list(c.certificate);
    out["components"] = components_json(components_after_removal(g, c.certificate));
    return out;
}

Json lambda_json(const Graph& g, int value)
{
    Json out;
    out["n"] = g.order();
    out["g"] = nullptr;
    out["kind"] = "lambda";
    out["value"] = value;
    out["reason"] = nullptr;
    out["certificate"] = Json::array();
    out["components"] = components_json(components_after_removal(g, VertexSet{}));
    return out;
}

Json expectation_json(const Expectation& e)
{
    return {{"g", e.g}, {"kappa_g_expected", optional_int(e.kappa_g)}, {"certificate_hint", vertex_list(e.certificate_hint)}};
}

Json generated_json(const GeneratedGraph& gen)
{
    Json out;
    out["label"] = gen.label;
    out["n"] = gen.graph.order();
    out["m"] = gen.graph.edge_count();
    out["graph6"] = emit_graph6(gen.graph);
    Json expected = Json::array();
    for (const auto& e : gen.expected) expected.push_back(expectation_json(e));
    out["expected"] = expected;
    out["kappa_expected"] = optional_int(gen.kappa_expected);
    return out;
}

Json extremal_json(const ExtremalReport& r, bool with_elapsed)
{
    Json out;
    out["fn"] = to_string(r.fn);
    out["n"] = r.n;
    out["k"] = r.k;
    out["g"] = r.g;
    out["searched_value"] = r.searched_value ? Json(*r.searched_value) : Json("Unattained");
    out["formula_value"] = r.formula.value ? Json(*r.formula.value) : Json("Undefined");
    out["formula_note"] = r.formula.note;
    out["match"] = r.match;
    out["documented_mismatch"] = r.documented_mismatch;
    if (r.fn == ExtremalFn::F) out["connected_only_value"] = optional_int(r.connected_only_value);
    if (r.fn == ExtremalFn::G) out["s_next_minus_one"] = optional_int(r.identity_value);
    out["witnesses"] = r.witnesses;
    out["graphs_scanned"] = r.graphs_scanned;
    if (with_elapsed) out["elapsed"] = r.elapsed_seconds;
    return out;
}

Json suite_json(const SuiteReport& r)
{
    Json out;
    out["suite"] = r.suite;
    out["max_n"] = r.max_n;
    out["passed"] = r.passed();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["cases"] = c.cases;
        cj["failures"] = c.failures;
        cj["advisory"] = c.advisory;
        cj["passed"] = c.passed();
        Json cx = Json::array();
        for (const auto& x : c.counterexamples)
            cx.push_back({{"graph6", x.graph}, {"g", x.g < 0 ? Json(nullptr) : Json(x.g)}, {"detail", x.detail}});
        cj["counterexamples"] = cx;
        checks.push_back(cj);
    }
    out["checks"] = checks;
    return out;
}

} // namespace gnc
