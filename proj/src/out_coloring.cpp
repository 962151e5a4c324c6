#include "ectarget/out_coloring.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <tuple>

#include <nlohmann/json.hpp>

#include "ectarget/bounds.hpp"
#include "ectarget/coloring.hpp"
#include "ectarget/io.hpp"

namespace ectarget {

namespace {

// Repeatedly removes a minimum-degree vertex (lowest id on ties), then
// colors in reverse removal order with the smallest free color.
std::vector<int> degeneracy_coloring(const std::vector<std::set<Vertex>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> degree(n);
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = static_cast<int>(adj[v].size());
        queue.insert({degree[v], v});
    }
    std::vector<char> removed(n, 0);
    std::vector<Vertex> order;
    while (!queue.empty()) {
        auto [deg, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        order.push_back(v);
        for (Vertex w : adj[v]) {
            if (removed[w]) continue;
            queue.erase({degree[w], w});
            queue.insert({--degree[w], w});
        }
    }

    std::vector<int> color(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::set<int> used;
        for (Vertex w : adj[*it]) used.insert(color[w]);
        int c = 1;
        while (used.count(c)) ++c;
        color[*it] = c;
    }
    return color;
}

// Ranks (primary, secondary) pairs lexicographically among the observed ones.
template <typename Key>
VertexColoring rank_colors(const std::vector<Key>& keys) {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colors;
    colors.reserve(keys.size());
    for (const auto& key : keys)
        colors.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), key) - sorted.begin()) + 1);
    return VertexColoring(std::max<int>(1, static_cast<int>(sorted.size())), std::move(colors));
}

struct ConflictGraph {
    std::vector<AuxEdge> edges;
    std::vector<std::set<Vertex>> undirected;
    int max_in_degree = 0;
    std::vector<int> coloring;
    int palette = 1;
};

ConflictGraph color_conflicts(int n, std::set<std::tuple<Vertex, Vertex, AuxRule>> raw) {
    ConflictGraph out;
    out.undirected.resize(n);
    std::vector<std::set<Vertex>> tails(n);
    for (const auto& [tail, head, rule] : raw) {
        out.edges.push_back({tail, head, rule});
        tails[head].insert(tail);
        out.undirected[tail].insert(head);
        out.undirected[head].insert(tail);
    }
    for (const auto& t : tails) out.max_in_degree = std::max(out.max_in_degree, static_cast<int>(t.size()));
    out.coloring = degeneracy_coloring(out.undirected);
    for (int c : out.coloring) out.palette = std::max(out.palette, c);
    return out;
}

std::int64_t saturating(const BigInt& value) {
    if (value > std::numeric_limits<std::int64_t>::max()) return std::numeric_limits<std::int64_t>::max();
    return value.convert_to<std::int64_t>();
}

}  // namespace

const char* to_string(AuxRule rule) {
    switch (rule) {
        case AuxRule::SharedChild: return "R1";
        case AuxRule::Grandparent: return "R2";
        case AuxRule::SameIndexPath: return "same_index";
    }
    return "?";
}

std::map<std::string, int> OutColoringCertificate::rule_counts() const {
    std::map<std::string, int> counts;
    for (const auto& e : construction_log) ++counts[to_string(e.rule)];
    return counts;
}

bool verify_out_coloring(const OrientedGraph& g, const VertexColoring& col) {
    if (!verify_proper(g.graph(), col)) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::set<int> parent_colors;
        for (Vertex p : g.parents(v)) {
            if (!parent_colors.insert(col[p]).second) return false;
            for (Vertex gp : g.parents(p))
                if (col[gp] == col[v]) return false;
        }
    }
    return true;
}

bool verify_in_coloring(const OrientedGraph& g, const VertexColoring& col) {
    if (!verify_proper(g.graph(), col)) return false;
    for (Vertex y = 0; y < g.num_vertices(); ++y) {
        std::map<int, std::vector<Vertex>> by_color;
        for (Vertex x : g.graph().neighbors(y)) by_color[col[x]].push_back(x);
        auto parents = g.parents(y);
        for (const auto& [color, ends] : by_color) {
            if (ends.size() < 2) continue;
            for (Vertex x : ends)
                if (!std::binary_search(parents.begin(), parents.end(), x)) return false;
        }
    }
    return true;
}

OutColoringCertificate build_out_coloring(const OrientedGraph& g, const VertexColoring& star) {
    require_total(g.graph(), star);
    if (!verify_star(g.graph(), star)) throw Error("coloring is not a star coloring of the underlying graph");

    const int n = g.num_vertices();
    const int d = g.max_in_degree();
    const int s = star.palette();

    std::set<std::tuple<Vertex, Vertex, AuxRule>> raw;
    for (Vertex x = 0; x < n; ++x) {
        auto parents = g.parents(x);
        for (Vertex a : parents)
            for (Vertex b : parents)
                if (a != b && star[a] == star[b]) raw.insert({b, a, AuxRule::SharedChild});
        for (Vertex b : parents)
            for (Vertex a : g.children(x))
                if (star[a] == star[b]) raw.insert({b, a, AuxRule::Grandparent});
    }

    ConflictGraph conflicts = color_conflicts(n, std::move(raw));
    if (conflicts.max_in_degree > d * (s - 1))
        throw std::logic_error("build_out_coloring: auxiliary in-degree exceeds d(s-1)");
    if (conflicts.palette > std::max(1, 2 * d * (s - 1) + 1))
        throw std::logic_error("build_out_coloring: degeneracy coloring exceeded 2d(s-1)+1 colors");

    std::vector<std::pair<int, int>> keys;
    for (Vertex v = 0; v < n; ++v) keys.emplace_back(star[v], conflicts.coloring[v]);

    OutColoringCertificate cert{rank_colors(keys),
                                std::max<std::int64_t>(1, std::int64_t{2} * d * s * s),
                                std::move(conflicts.edges),
                                d,
                                s,
                                conflicts.max_in_degree,
                                conflicts.palette};
    if (!verify_out_coloring(g, cert.coloring) || cert.coloring.palette() > cert.budget)
        throw std::logic_error("build_out_coloring: result is not an out-coloring within budget");
    return cert;
}

OutColoringCertificate out_coloring_from_universal(const OrientedGraph& g, const EdgeColoredGraph& target, int k,
                                                   const SearchLimits& limits) {
    if (k < 2) throw Error("edge palette k must be at least 2");
    if (target.k() != k)
        throw Error("target edge palette k=" + std::to_string(target.k()) + " differs from k=" + std::to_string(k));

    const Graph& base = g.graph();
    const int n = g.num_vertices();
    const int d = g.max_in_degree();
    const int m = d <= 1 ? 1 : std::max(1, ceil_log(d, k));

    // Edge {v, p_j(v)} gets digit i of j-1 in base k, plus one.
    std::vector<int> parent_number(base.num_edges(), 0);
    for (Vertex v = 0; v < n; ++v) {
        auto parents = g.parents(v);
        for (std::size_t j = 0; j < parents.size(); ++j) parent_number[*base.edge_id(v, parents[j])] = static_cast<int>(j);
    }

    std::vector<std::vector<std::int64_t>> keys(n, std::vector<std::int64_t>(m + 1, 0));
    std::int64_t place = 1;
    for (int i = 0; i < m; ++i) {
        std::vector<int> colors(base.num_edges());
        for (int id = 0; id < base.num_edges(); ++id) colors[id] = static_cast<int>((parent_number[id] / place) % k) + 1;
        EdgeColoredGraph colored(base, k, std::move(colors));
        auto h = find_homomorphism(colored, target, limits);
        if (!h) throw NotUniversalError(std::move(colored));
        for (Vertex v = 0; v < n; ++v) keys[v][i] = h->image[v];
        place *= k;
    }

    std::set<std::tuple<Vertex, Vertex, AuxRule>> raw;
    for (Vertex w = 0; w < n; ++w) {
        auto parents = g.parents(w);
        for (std::size_t a = 0; a < parents.size(); ++a) {
            auto grand = g.parents(parents[a]);
            if (a < grand.size()) raw.insert({grand[a], w, AuxRule::SameIndexPath});
        }
    }
    ConflictGraph conflicts = color_conflicts(n, std::move(raw));
    if (conflicts.max_in_degree > d)
        throw std::logic_error("out_coloring_from_universal: conflict in-degree exceeds d");
    if (conflicts.palette > 2 * d + 1)
        throw std::logic_error("out_coloring_from_universal: conflict coloring exceeded 2d+1 colors");
    for (Vertex v = 0; v < n; ++v) keys[v][m] = conflicts.coloring[v];

    const std::int64_t p = target.num_vertices();
    OutColoringCertificate cert{rank_colors(keys),
                                saturating(lemma7_budget(d, p, k)),
                                std::move(conflicts.edges),
                                d,
                                static_cast<int>(p),
                                conflicts.max_in_degree,
                                conflicts.palette};
    if (!verify_out_coloring(g, cert.coloring) || cert.coloring.palette() > cert.budget)
        throw std::logic_error("out_coloring_from_universal: result is not an out-coloring within budget");
    return cert;
}

std::string serialize(const OutColoringCertificate& cert) {
    nlohmann::json header{{"palette", cert.coloring.palette()},
                          {"budget", cert.budget},
                          {"rule_counts", cert.rule_counts()},
                          {"in_degree", cert.in_degree},
                          {"base_palette", cert.base_palette},
                          {"aux_max_in_degree", cert.aux_max_in_degree},
                          {"aux_palette", cert.aux_palette}};
    return header.dump() + "\n" + serialize(cert.coloring);
}

}  // namespace ectarget
