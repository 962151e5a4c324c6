#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ectarget {

using Vertex = int;

// Unordered edge, stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Edges are kept sorted
// lexicographically; edge ids index into that order.
class Graph {
public:
    // Throws Error on n < 1, loops, duplicate edges or ids >= n.
    Graph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[id]; }

    // Neighbors in ascending order, with the matching edge ids.
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::span<const int> incident_edges(Vertex v) const { return adj_edge_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    std::optional<int> edge_id(Vertex a, Vertex b) const;
    bool adjacent(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<int>> adj_edge_;
};

struct ColoredEdge {
    Vertex u;
    Vertex v;
    int color;
};

// A k-edge-colored graph: colors are 1-based, 1..k, k >= 2.
class EdgeColoredGraph {
public:
    EdgeColoredGraph(int n, int k, std::vector<ColoredEdge> edges);
    // colors[e] is the color of graph.edge(e).
    EdgeColoredGraph(Graph graph, int k, std::vector<int> colors);

    const Graph& graph() const { return graph_; }
    int k() const { return k_; }
    int num_vertices() const { return graph_.num_vertices(); }
    int num_edges() const { return graph_.num_edges(); }
    int color(int edge_id) const { return colors_[edge_id]; }
    std::span<const int> colors() const { return colors_; }

    friend bool operator==(const EdgeColoredGraph&, const EdgeColoredGraph&) = default;

private:
    Graph graph_;
    int k_;
    std::vector<int> colors_;
};

// A graph with a direction on every edge.
class OrientedGraph {
public:
    // heads[e] is the head of graph.edge(e) and must be one of its endpoints.
    OrientedGraph(Graph graph, std::vector<Vertex> heads);

    const Graph& graph() const { return graph_; }
    int num_vertices() const { return graph_.num_vertices(); }

    Vertex head(int edge_id) const { return heads_[edge_id]; }
    Vertex tail(int edge_id) const;

    // Parents (tails of in-edges) and children, ascending.
    std::span<const Vertex> parents(Vertex v) const { return parents_[v]; }
    std::span<const Vertex> children(Vertex v) const { return children_[v]; }
    int in_degree(Vertex v) const { return static_cast<int>(parents_[v].size()); }
    int max_in_degree() const;

    OrientedGraph transpose() const;

    friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
        return a.graph_ == b.graph_ && a.heads_ == b.heads_;
    }

private:
    Graph graph_;
    std::vector<Vertex> heads_;
    std::vector<std::vector<Vertex>> parents_;
    std::vector<std::vector<Vertex>> children_;
};

// Vertex coloring with colors 1..palette.
class VertexColoring {
public:
    VertexColoring(int palette, std::vector<int> colors);

    // Palette is the largest color used (at least 1).
    static VertexColoring from_colors(std::vector<int> colors);

    int palette() const { return palette_; }
    int size() const { return static_cast<int>(colors_.size()); }
    int operator[](Vertex v) const { return colors_[v]; }
    std::span<const int> colors() const { return colors_; }
    int distinct_colors() const;

    friend bool operator==(const VertexColoring&, const VertexColoring&) = default;

private:
    int palette_;
    std::vector<int> colors_;
};

// Vertex map from a source graph into a target; target ids may be large
// (universal targets are implicit).
struct Homomorphism {
    std::vector<std::int64_t> image;

    friend bool operator==(const Homomorphism&, const Homomorphism&) = default;
};

struct InducedSubgraph {
    Graph graph;
    // original[i] is the id in the parent graph of vertex i.
    std::vector<Vertex> original;
};

// Vertices are re-indexed by ascending original id. Throws on empty or
// out-of-range sets.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Number of edges of g with both endpoints in the set.
int count_induced_edges(const Graph& g, std::span<const Vertex> vertices);

// Throws Error unless the coloring covers exactly g's vertices.
void require_total(const Graph& g, const VertexColoring& col);

}  // namespace ectarget
