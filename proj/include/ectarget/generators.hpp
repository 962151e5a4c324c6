#pragma once

#include <cstdint>
#include <random>

#include "ectarget/graph.hpp"

// Deterministic graph families used by tests, the acceptance suite and the
// CLI's sample corpus.
namespace ectarget::gen {

Graph edgeless(int n);
Graph path(int n);
Graph cycle(int n);
Graph clique(int n);
Graph star(int leaves);
Graph grid(int rows, int cols);
// K_n with every edge subdivided once.
Graph subdivided_clique(int n);
Graph random_tree(int n, std::mt19937_64& rng);
// G(n, p).
Graph random_graph(int n, double p, std::mt19937_64& rng);
// Planar triangulation on n >= 3 vertices: start from a triangle, then
// repeatedly insert a vertex into a uniformly chosen face.
Graph random_planar_triangulation(int n, std::mt19937_64& rng);
// Keeps each edge independently with probability keep.
Graph random_subgraph(const Graph& g, double keep, std::mt19937_64& rng);

EdgeColoredGraph random_edge_coloring(const Graph& g, int k, std::mt19937_64& rng);

}  // namespace ectarget::gen
