#pragma once

#include <cstdint>

#include "ectarget/density_orient.hpp"
#include "ectarget/graph.hpp"
#include "ectarget/out_coloring.hpp"
#include "ectarget/universal.hpp"

namespace ectarget {

// Everything in the construction that depends only on the underlying graph
// and k: a minimum-in-degree orientation, a greedy star coloring, the
// out-coloring built from them and the universal target they determine.
struct PipelinePlan {
    Density density;
    MinOrientation orientation;
    VertexColoring star;
    OutColoringCertificate out;
    UniversalTarget target;
};

PipelinePlan plan_pipeline(const Graph& g, int k, std::uint64_t seed = 0);

// Explicit homomorphism of an edge coloring of plan's graph into its target.
Homomorphism map_into(const PipelinePlan& plan, const EdgeColoredGraph& g);

}  // namespace ectarget
