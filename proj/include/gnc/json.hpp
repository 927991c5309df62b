#pragma once

#include "gnc/extremal.hpp"
#include "gnc/families.hpp"
#include "gnc/graph.hpp"
#include "gnc/solver.hpp"
#include "gnc/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string_view>

namespace gnc {

/// Keys keep insertion order so documents are stable and readable.
using Json = nlohmann::ordered_json;

Json vertex_list(VertexSet s);

/// {n, g, kind, value, reason, certificate, components}. `kind` is "gnc" or
/// "extra"; components describe G - certificate (G itself when no cut).
Json cut_result_json(const Graph& g, int good, std::string_view kind, const CutOutcome<VertexSet>& r);
/// Same schema for lambda_g; the certificate is a list of [u, v] edges.
Json edge_result_json(const Graph& g, int extra, const EdgeExtraResult& r);
/// kind "kappa": classical vertex connectivity with its cut.
Json kappa_json(const Graph& g, const ClassicalConnectivity& c);
/// kind "lambda": classical edge connectivity (value only).
Json lambda_json(const Graph& g, int value);

Json expectation_json(const Expectation& e);
/// {label, n, m, graph6, expected: [...], kappa_expected}.
Json generated_json(const GeneratedGraph& gen);

/// elapsed_seconds is written only when with_elapsed is set, so the default
/// document is identical across runs and thread counts.
Json extremal_json(const ExtremalReport& r, bool with_elapsed = false);

Json suite_json(const SuiteReport& r);

} // namespace gnc
