#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ectarget/graph.hpp"

namespace ectarget {

// Complete k-edge-colored graph whose vertices are the tuples
// (i, x_1, ..., x_q) with i in [q], x_j in [k] and at most d of the x_j
// different from k. The edge {(i, x..), (j, y..)} has color min(y_i, x_j).
//
// Vertex ids are lexicographic ranks of the tuples. Nothing is stored per
// vertex unless the target was materialized by build_universal.
class UniversalTarget {
public:
    using Id = std::int64_t;

    // Implicit target; d is capped at q. Throws Error on q < 1, d < 0, k < 2
    // or a vertex count beyond 2^62.
    UniversalTarget(int q, int d, int k);

    int q() const { return q_; }
    int d() const { return d_; }
    int k() const { return k_; }
    Id size() const { return size_; }
    bool materialized() const { return !table_.empty(); }

    // Tuple layout: t[0] = i, t[j] = x_j for j = 1..q.
    std::vector<int> tuple(Id id) const;
    Id id_of(std::span<const int> tuple) const;
    bool is_vertex(std::span<const int> tuple) const;

    // Throws Error when a == b.
    int edge_color(Id a, Id b) const;
    // Throws Error when u == v. Assumes both are tuples of the same target.
    static int edge_color(std::span<const int> u, std::span<const int> v);

    // Explicit complete graph; throws GuardExceeded above max_vertices.
    EdgeColoredGraph to_edge_colored(Id max_vertices = 64) const;

private:
    friend UniversalTarget build_universal(int q, int d, int k, Id max_vertices);

    // completions_[len][budget]: suffixes of `len` coordinates with at most
    // `budget` entries different from k.
    Id completions(int len, int budget) const { return completions_[len][budget]; }

    int q_;
    int d_;
    int k_;
    Id size_;
    std::vector<std::vector<Id>> completions_;
    std::vector<int> table_;
};

// q * sum_{j=0}^{min(d,q)} C(q,j) (k-1)^j, exactly. Throws Error on overflow.
std::int64_t universal_size(int q, int d, int k);

inline constexpr std::int64_t kUniversalEnumerationGuard = 1'000'000;

// Enumerates every tuple in lexicographic order. Throws GuardExceeded when
// the target has more than max_vertices vertices.
UniversalTarget build_universal(int q, int d, int k,
                                UniversalTarget::Id max_vertices = kUniversalEnumerationGuard);

// h(u) = (f(u), x_1..x_q) with x_i the color of the edge to u's parent of
// out-color i, or k when there is none. Throws Error naming the first
// violated precondition.
Homomorphism build_homomorphism(const EdgeColoredGraph& g, const OrientedGraph& orientation,
                                const VertexColoring& out_coloring, const UniversalTarget& target);

bool verify_homomorphism(const EdgeColoredGraph& source, const EdgeColoredGraph& target,
                         const Homomorphism& h);
bool verify_homomorphism(const EdgeColoredGraph& source, const UniversalTarget& target,
                         const Homomorphism& h);

struct SearchLimits {
    int max_source_vertices = 12;
    int max_target_vertices = 64;
    std::int64_t max_colorings = 1'000'000;
    // min_universal_size: largest number of complete candidate targets per size.
    std::int64_t max_candidate_targets = 1 << 20;

    // Every limit multiplied by factor (saturating).
    SearchLimits scaled(std::int64_t factor) const;
};

// Complete backtracking search with forward checking. Throws GuardExceeded.
std::optional<Homomorphism> find_homomorphism(const EdgeColoredGraph& source,
                                              const EdgeColoredGraph& target,
                                              const SearchLimits& limits = {});

struct UniversalityCheck {
    bool universal;
    // Lexicographically least k-edge-coloring (by edge id order) with no
    // homomorphism into the target.
    std::optional<EdgeColoredGraph> counterexample;
};

UniversalityCheck check_universal(const EdgeColoredGraph& target, const Graph& g, int k,
                                  const SearchLimits& limits = {});

struct MinUniversal {
    int size;
    EdgeColoredGraph target;
};

// Smallest k-edge-colored target admitting a homomorphism from every
// k-edge-coloring of every listed graph, searched up to max_vertices;
// nullopt when none exists at that size.
std::optional<MinUniversal> min_universal_size(std::span<const Graph> graphs, int k, int max_vertices,
                                               const SearchLimits& limits = {});

}  // namespace ectarget
