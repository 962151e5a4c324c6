#pragma once

#include <cstdint>
#include <optional>

#include "ectarget/graph.hpp"

namespace ectarget {

// Default vertex limit for the exact backtracking colorers.
inline constexpr int kExactColoringGuard = 20;

bool verify_proper(const Graph& g, const VertexColoring& col);

// Proper, and every two color classes induce a forest.
bool verify_acyclic(const Graph& g, const VertexColoring& col);

// Proper, and no path on four vertices uses only two colors. Enumerates
// every 4-vertex path through its middle edge.
bool verify_star(const Graph& g, const VertexColoring& col);

// Same predicate, checked independently: every connected component of every
// bicolored subgraph is a star (a tree with at most one vertex of degree > 1).
bool verify_star_by_components(const Graph& g, const VertexColoring& col);

// Smallest-palette-first backtracking. Returns a coloring using at most
// max_colors colors, or nullopt when none exists. Throws GuardExceeded when
// the graph has more than `guard` vertices.
std::optional<VertexColoring> exact_star_coloring(const Graph& g, int max_colors,
                                                  int guard = kExactColoringGuard);
std::optional<VertexColoring> exact_acyclic_coloring(const Graph& g, int max_colors,
                                                     int guard = kExactColoringGuard);

// Vertices by descending degree (seed shuffles ties); each takes the smallest
// color keeping the partial coloring a star coloring. Always verifies.
VertexColoring greedy_star_coloring(const Graph& g, std::uint64_t seed = 0);

}  // namespace ectarget
