#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "ectarget/graph.hpp"

namespace ectarget {

using Rational = boost::rational<std::int64_t>;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Maximum edges-per-vertex ratio over nonempty subgraphs, with a vertex set
// attaining it.
struct Density {
    Rational value;
    std::vector<Vertex> witness;
};

// Exact, via binary search over the candidate ratios e/v (v <= n) with a
// max-flow feasibility test per candidate. Edgeless graphs give 0 with
// witness {0}.
Density densest_subgraph(const Graph& g);

// Smallest integer >= value.
std::int64_t ceil(const Rational& value);

struct OrientationResult {
    std::optional<OrientedGraph> orientation;
    // When infeasible: a vertex set S with |E(G[S])| > d|S|.
    std::vector<Vertex> violating_set;

    bool feasible() const { return orientation.has_value(); }
};

// Orientation with every in-degree <= d, if one exists.
OrientationResult find_orientation(const Graph& g, int d);

struct MinOrientation {
    int d;
    OrientedGraph orientation;
};

// d = ceil(D(G)) together with an orientation attaining it.
MinOrientation min_orientation(const Graph& g);

// For every color pair, roots each tree of the bicolored forest at its
// lowest id and orients edges away from the root. In-degree <= palette-1.
// Throws Error when the coloring is not acyclic.
OrientedGraph orientation_from_acyclic(const Graph& g, const VertexColoring& col);

}  // namespace ectarget
