#include "ectarget/pipeline.hpp"

#include "ectarget/coloring.hpp"

namespace ectarget {

PipelinePlan plan_pipeline(const Graph& g, int k, std::uint64_t seed) {
    Density density = densest_subgraph(g);
    MinOrientation orientation = min_orientation(g);
    VertexColoring star = greedy_star_coloring(g, seed);
    OutColoringCertificate out = build_out_coloring(orientation.orientation, star);
    UniversalTarget target(out.coloring.palette(), orientation.d, k);
    return {std::move(density), std::move(orientation), std::move(star), std::move(out), std::move(target)};
}

Homomorphism map_into(const PipelinePlan& plan, const EdgeColoredGraph& g) {
    return build_homomorphism(g, plan.orientation.orientation, plan.out.coloring, plan.target);
}

}  // namespace ectarget
