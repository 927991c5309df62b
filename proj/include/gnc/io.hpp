#pragma once

#include "gnc/graph.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace gnc {

/// Decodes one graph6 record (no trailing newline, optional ">>graph6<<" prefix).
/// Throws ParseError carrying the offending byte offset.
Graph parse_graph6(std::string_view text);
/// Encodes G as graph6 without header or newline.
std::string emit_graph6(const Graph& g);

/// Edge list: header line "n m", then m lines "u v" (0-indexed). Blank lines
/// and lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

enum class GraphFormat { Auto, Graph6, EdgeList };

/// Auto: the first non-blank line starting with a digit means edge list,
/// anything else graph6.
GraphFormat detect_format(std::string_view text);

/// Reads one edge-list graph, or every graph6 line of the text.
std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format = GraphFormat::Auto);

std::string read_all(std::istream& in);
std::string read_file(const std::string& path);

} // namespace gnc
