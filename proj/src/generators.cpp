#include "ectarget/generators.hpp"

#include <array>

#include "ectarget/error.hpp"

namespace ectarget::gen {

Graph edgeless(int n) { return Graph(n, {}); }

Graph path(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, std::move(edges));
}

Graph cycle(int n) {
    if (n < 3) throw Error("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return Graph(n, std::move(edges));
}

Graph clique(int n) {
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
    return Graph(n, std::move(edges));
}

Graph star(int leaves) {
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return Graph(leaves + 1, std::move(edges));
}

Graph grid(int rows, int cols) {
    std::vector<Edge> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
        }
    }
    return Graph(rows * cols, std::move(edges));
}

Graph subdivided_clique(int n) {
    std::vector<Edge> edges;
    int next = n;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            edges.push_back({a, next});
            edges.push_back({next, b});
            ++next;
        }
    }
    return Graph(next, std::move(edges));
}

Graph random_tree(int n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.push_back({parent(rng), v});
    }
    return Graph(n, std::move(edges));
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng)) edges.push_back({a, b});
    return Graph(n, std::move(edges));
}

Graph random_planar_triangulation(int n, std::mt19937_64& rng) {
    if (n < 3) throw Error("triangulation needs at least 3 vertices");
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    // Both sides of the initial triangle are faces.
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
    for (int v = 3; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
        std::size_t f = pick(rng);
        auto [a, b, c] = faces[f];
        edges.push_back({a, v});
        edges.push_back({b, v});
        edges.push_back({c, v});
        faces[f] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({a, c, v});
    }
    return Graph(n, std::move(edges));
}

Graph random_subgraph(const Graph& g, double keep, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(keep);
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (coin(rng)) edges.push_back(e);
    return Graph(g.num_vertices(), std::move(edges));
}

EdgeColoredGraph random_edge_coloring(const Graph& g, int k, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> color(1, k);
    std::vector<int> colors(g.num_edges());
    for (auto& c : colors) c = color(rng);
    return EdgeColoredGraph(g, k, std::move(colors));
}

}  // namespace ectarget::gen
