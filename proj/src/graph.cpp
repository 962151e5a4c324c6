#include "ectarget/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "ectarget/error.hpp"

namespace ectarget {

namespace {

std::string edge_str(Vertex a, Vertex b) {
    return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw Error("graph must have at least one vertex");
    for (auto& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
            throw Error("edge " + edge_str(e.u, e.v) + " has an endpoint outside 0.." +
                        std::to_string(n_ - 1));
        if (e.u == e.v) throw Error("loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) throw Error("duplicate edge " + edge_str(dup->u, dup->v));

    adj_.resize(n_);
    adj_edge_.resize(n_);
    for (int id = 0; id < num_edges(); ++id) {
        adj_[edges_[id].u].push_back(edges_[id].v);
        adj_edge_[edges_[id].u].push_back(id);
        adj_[edges_[id].v].push_back(edges_[id].u);
        adj_edge_[edges_[id].v].push_back(id);
    }
    for (Vertex v = 0; v < n_; ++v) {
        std::vector<int> order(adj_[v].size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return adj_[v][a] < adj_[v][b]; });
        std::vector<Vertex> nb;
        std::vector<int> ids;
        for (int i : order) {
            nb.push_back(adj_[v][i]);
            ids.push_back(adj_edge_[v][i]);
        }
        adj_[v] = std::move(nb);
        adj_edge_[v] = std::move(ids);
    }
}

std::optional<int> Graph::edge_id(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return std::nullopt;
    const auto& nb = adj_[a];
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return adj_edge_[a][it - nb.begin()];
}

namespace {

struct SplitEdges {
    Graph graph;
    std::vector<int> colors;
};

SplitEdges split_colored(int n, const std::vector<ColoredEdge>& edges) {
    std::vector<Edge> plain;
    plain.reserve(edges.size());
    for (const auto& e : edges) plain.push_back({e.u, e.v});
    Graph g(n, std::move(plain));
    std::vector<int> colors(edges.size());
    for (const auto& e : edges) colors[*g.edge_id(e.u, e.v)] = e.color;
    return {std::move(g), std::move(colors)};
}

}  // namespace

EdgeColoredGraph::EdgeColoredGraph(int n, int k, std::vector<ColoredEdge> edges)
    : EdgeColoredGraph([&] {
          auto split = split_colored(n, edges);
          return EdgeColoredGraph(std::move(split.graph), k, std::move(split.colors));
      }()) {}

EdgeColoredGraph::EdgeColoredGraph(Graph graph, int k, std::vector<int> colors)
    : graph_(std::move(graph)), k_(k), colors_(std::move(colors)) {
    if (k_ < 2) throw Error("edge palette k must be at least 2, got " + std::to_string(k_));
    if (static_cast<int>(colors_.size()) != graph_.num_edges())
        throw Error("edge coloring must assign exactly one color per edge");
    for (int id = 0; id < graph_.num_edges(); ++id) {
        if (colors_[id] < 1 || colors_[id] > k_) {
            const auto& e = graph_.edge(id);
            throw Error("edge " + edge_str(e.u, e.v) + " has color " +
                        std::to_string(colors_[id]) + " outside 1.." + std::to_string(k_));
        }
    }
}

OrientedGraph::OrientedGraph(Graph graph, std::vector<Vertex> heads)
    : graph_(std::move(graph)), heads_(std::move(heads)) {
    if (static_cast<int>(heads_.size()) != graph_.num_edges())
        throw Error("orientation must direct every edge exactly once");
    parents_.resize(graph_.num_vertices());
    children_.resize(graph_.num_vertices());
    for (int id = 0; id < graph_.num_edges(); ++id) {
        const auto& e = graph_.edge(id);
        if (heads_[id] != e.u && heads_[id] != e.v)
            throw Error("head " + std::to_string(heads_[id]) + " is not an endpoint of edge " +
                        edge_str(e.u, e.v));
        Vertex t = tail(id);
        parents_[heads_[id]].push_back(t);
        children_[t].push_back(heads_[id]);
    }
    for (auto& p : parents_) std::sort(p.begin(), p.end());
    for (auto& c : children_) std::sort(c.begin(), c.end());
}

Vertex OrientedGraph::tail(int edge_id) const {
    const auto& e = graph_.edge(edge_id);
    return heads_[edge_id] == e.u ? e.v : e.u;
}

int OrientedGraph::max_in_degree() const {
    int best = 0;
    for (const auto& p : parents_) best = std::max(best, static_cast<int>(p.size()));
    return best;
}

OrientedGraph OrientedGraph::transpose() const {
    std::vector<Vertex> flipped(heads_.size());
    for (int id = 0; id < graph_.num_edges(); ++id) flipped[id] = tail(id);
    return OrientedGraph(graph_, std::move(flipped));
}

VertexColoring::VertexColoring(int palette, std::vector<int> colors)
    : palette_(palette), colors_(std::move(colors)) {
    if (palette_ < 1) throw Error("palette must be at least 1");
    for (std::size_t v = 0; v < colors_.size(); ++v) {
        if (colors_[v] < 1 || colors_[v] > palette_)
            throw Error("vertex " + std::to_string(v) + " has color " +
                        std::to_string(colors_[v]) + " outside 1.." + std::to_string(palette_));
    }
}

VertexColoring VertexColoring::from_colors(std::vector<int> colors) {
    int palette = 1;
    for (int c : colors) palette = std::max(palette, c);
    return VertexColoring(palette, std::move(colors));
}

int VertexColoring::distinct_colors() const {
    return static_cast<int>(std::set<int>(colors_.begin(), colors_.end()).size());
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    if (vertices.empty()) throw Error("induced subgraph needs a nonempty vertex set");
    std::vector<Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.front() < 0 || sorted.back() >= g.num_vertices())
        throw Error("vertex set contains an id outside 0.." + std::to_string(g.num_vertices() - 1));

    std::vector<int> index(g.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) index[sorted[i]] = i;
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v]});
    return {Graph(static_cast<int>(sorted.size()), std::move(edges)), std::move(sorted)};
}

int count_induced_edges(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<char> in(g.num_vertices(), 0);
    for (Vertex v : vertices) in[v] = 1;
    int count = 0;
    for (const auto& e : g.edges()) count += in[e.u] && in[e.v];
    return count;
}

void require_total(const Graph& g, const VertexColoring& col) {
    if (col.size() != g.num_vertices())
        throw Error("coloring covers " + std::to_string(col.size()) + " vertices, graph has " +
                    std::to_string(g.num_vertices()));
}

}  // namespace ectarget
