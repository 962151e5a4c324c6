#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ectarget/error.hpp"
#include "ectarget/graph.hpp"
#include "ectarget/universal.hpp"

namespace ectarget {

// (C1) adjacent vertices differ, (C2) distinct parents of a vertex differ,
// (C3) a vertex differs from each of its grandparents.
bool verify_out_coloring(const OrientedGraph& g, const VertexColoring& col);

// Proper, and every bicolored 3-vertex path has both edges pointing at its
// middle vertex. A coloring is an out-coloring of G exactly when it is an
// in-coloring of G's transpose.
bool verify_in_coloring(const OrientedGraph& g, const VertexColoring& col);

enum class AuxRule {
    SharedChild,    // R1: two parents of the same vertex share a star color
    Grandparent,    // R2: b -> x -> a with star(a) == star(b)
    SameIndexPath,  // u = p_i(p_i(w)) in the reverse construction
};

const char* to_string(AuxRule rule);

struct AuxEdge {
    Vertex tail;
    Vertex head;
    AuxRule rule;

    friend bool operator==(const AuxEdge&, const AuxEdge&) = default;
};

struct OutColoringCertificate {
    VertexColoring coloring;
    std::int64_t budget;
    // Distinct auxiliary conflict edges, sorted by (tail, head, rule).
    std::vector<AuxEdge> construction_log;
    // Max in-degree of the orientation the coloring was built for.
    int in_degree;
    // Star palette (build_out_coloring) or target size (from universal).
    int base_palette;
    // Max number of distinct conflict tails at any vertex.
    int aux_max_in_degree;
    // Palette of the greedy conflict-graph coloring.
    int aux_palette;

    std::map<std::string, int> rule_counts() const;
};

// Pairs every vertex's star color with a greedy degeneracy-order color of
// the R1/R2 conflict graph. Palette <= 2*d*s^2 (budget is at least 1 so the
// edgeless case is covered). Throws Error if `star` is not a star coloring.
OutColoringCertificate build_out_coloring(const OrientedGraph& g, const VertexColoring& star);

// The target was not universal: `witness` has no homomorphism into it.
class NotUniversalError : public Error {
public:
    explicit NotUniversalError(EdgeColoredGraph witness)
        : Error("target admits no homomorphism from an edge coloring of the graph"), witness_(std::move(witness)) {}

    const EdgeColoredGraph& witness() const { return witness_; }

private:
    EdgeColoredGraph witness_;
};

// Out-coloring from a universal target H on p vertices: m = max(1,
// ceil(log_k d)) edge colorings encode the base-k digits of parent indices,
// each is mapped into H, and the product coloring is refined against
// same-index grandparents with at most 2d+1 extra colors.
// Palette <= (2d+1) * p^m.
OutColoringCertificate out_coloring_from_universal(const OrientedGraph& g, const EdgeColoredGraph& target, int k,
                                                   const SearchLimits& limits = {});

// JSON header line followed by the coloring in "palette q" / "v c" form.
std::string serialize(const OutColoringCertificate& cert);

}  // namespace ectarget
