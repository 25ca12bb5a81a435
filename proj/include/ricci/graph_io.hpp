#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci {

/// Raw graph6 payload: vertex count plus edges, no connectivity requirement.
struct Graph6Data {
  int n = 0;
  std::vector<Edge> edges;
};

/// Decodes one graph6 line (optional ">>graph6<<" prefix, trailing newline
/// ignored). Errors: MalformedHeader, TruncatedBits, MalformedBits.
Graph6Data decode_graph6(std::string_view text);
std::string encode_graph6(int n, std::span<const Edge> edges);

Graph parse_graph6(std::string_view text, WeightScheme scheme = WeightScheme::Combinatorial);
std::string emit_graph6(const Graph& g);

/// {"n": int, "edges": [[u,v],...], "scheme": "combinatorial"|"normalized"}
Graph parse_edge_json(std::string_view text);
std::string emit_edge_json(const Graph& g);

/// Reads a graph file by extension: ".json" -> edge JSON, anything else ->
/// first non-empty graph6 line. `scheme`, when given, overrides the file.
Graph read_graph_file(const std::string& path, std::optional<WeightScheme> scheme = std::nullopt);

}  // namespace ricci
