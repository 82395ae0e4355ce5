#pragma once

#include <string>
#include <string_view>

#include "forest_turan/graph.hpp"

namespace forest_turan {

/// Standard graph6 encoding (no trailing newline, no ">>graph6<<" header).
std::string to_graph6(const GeneralGraph& g);
/// graph6 of the underlying simple graph, X-vertices first.
std::string to_graph6(const BipartiteGraph& g);

/// Parses one graph6 line. An optional ">>graph6<<" header and a trailing
/// newline are accepted. Throws ParseError with the offending byte offset.
GeneralGraph from_graph6(std::string_view text);

/// Two-line form: "m n\n<graph6>\n".
std::string to_bipartite_text(const BipartiteGraph& g);

/// Parses the two-line form. Every edge must join a vertex below m to one at
/// or above m; otherwise ParseError.
BipartiteGraph from_bipartite_text(std::string_view text);

}  // namespace forest_turan
