#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ectarget/graph.hpp"

// Line-oriented text formats. Blank lines and lines starting with '#' are
// ignored everywhere.
//
//   graph:        "n m k" then m lines "u v c"      (0 <= u,v < n, 1 <= c <= k)
//   orientation:  as graph, each line "u v c >" (tail u) or "u v c <" (tail v)
//   coloring:     "palette q" then n lines "v c"
//   homomorphism: "hom n" then n lines "v t"

namespace ectarget {

EdgeColoredGraph parse_edge_colored(std::string_view text);
// Accepts any k >= 1; colors are validated against k and discarded.
Graph parse_graph(std::string_view text);
OrientedGraph parse_oriented(std::string_view text);
VertexColoring parse_coloring(std::string_view text);
Homomorphism parse_homomorphism(std::string_view text);

// Canonical forms: edges in lexicographic order, u < v.
std::string serialize(const EdgeColoredGraph& g);
std::string serialize(const Graph& g);
std::string serialize(const OrientedGraph& g, const EdgeColoredGraph* colors = nullptr);
std::string serialize(const VertexColoring& col);
std::string serialize(const Homomorphism& h);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace ectarget
