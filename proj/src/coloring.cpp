#include "ectarget/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "ectarget/error.hpp"

namespace ectarget {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    // False if already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<int> parent_;
};

std::map<std::pair<int, int>, std::vector<int>> edges_by_color_pair(const Graph& g,
                                                                     std::span<const int> col) {
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int id = 0; id < g.num_edges(); ++id) {
        int a = col[g.edge(id).u], b = col[g.edge(id).v];
        groups[{std::min(a, b), std::max(a, b)}].push_back(id);
    }
    return groups;
}

bool has_color(const Graph& g, std::span<const int> col, Vertex v, Vertex skip, int color) {
    for (Vertex w : g.neighbors(v))
        if (w != skip && col[w] == color) return true;
    return false;
}

// Partial-coloring checks; color 0 means uncolored. Only constraints that
// involve v are examined.
bool proper_at(const Graph& g, std::span<const int> col, Vertex v) {
    for (Vertex w : g.neighbors(v))
        if (col[w] == col[v]) return false;
    return true;
}

bool star_ok_at(const Graph& g, std::span<const int> col, Vertex v) {
    if (!proper_at(g, col, v)) return false;
    const int cv = col[v];
    for (Vertex b : g.neighbors(v)) {
        if (col[b] == 0) continue;
        // v interior: a - v - b - d
        if (has_color(g, col, v, b, col[b]) && has_color(g, col, b, v, cv)) return false;
        // v at an end: v - b - c - d
        for (Vertex c : g.neighbors(b)) {
            if (c == v || col[c] != cv) continue;
            if (has_color(g, col, c, b, col[b])) return false;
        }
    }
    return true;
}

bool acyclic_ok_at(const Graph& g, std::span<const int> col, Vertex v) {
    if (!proper_at(g, col, v)) return false;
    std::vector<int> others;
    for (Vertex w : g.neighbors(v))
        if (col[w] != 0) others.push_back(col[w]);
    std::sort(others.begin(), others.end());
    others.erase(std::unique(others.begin(), others.end()), others.end());
    for (int other : others) {
        DisjointSets sets(g.num_vertices());
        for (const auto& e : g.edges()) {
            int a = col[e.u], b = col[e.v];
            if (a == 0 || b == 0) continue;
            if (!((a == col[v] && b == other) || (a == other && b == col[v]))) continue;
            if (!sets.unite(e.u, e.v)) return false;
        }
    }
    return true;
}

// Colors vertices in BFS order from vertex 0 (then next unvisited), trying
// colors 1..min(max_used+1, max_colors).
template <typename Check>
std::optional<VertexColoring> backtrack_coloring(const Graph& g, int max_colors, int guard,
                                                 Check check) {
    if (g.num_vertices() > guard)
        throw GuardExceeded("exact coloring limited to " + std::to_string(guard) + " vertices, graph has " +
                            std::to_string(g.num_vertices()));
    if (max_colors < 1) return std::nullopt;

    const int n = g.num_vertices();
    std::vector<Vertex> order;
    std::vector<char> seen(n, 0);
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::size_t head = order.size();
        order.push_back(root);
        while (head < order.size()) {
            Vertex v = order[head++];
            for (Vertex w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
        }
    }

    std::vector<int> col(n, 0);
    auto search = [&](auto& self, int pos, int used) -> bool {
        if (pos == n) return true;
        Vertex v = order[pos];
        int top = std::min(used + 1, max_colors);
        for (int c = 1; c <= top; ++c) {
            col[v] = c;
            if (check(g, std::span<const int>(col), v) && self(self, pos + 1, std::max(used, c)))
                return true;
        }
        col[v] = 0;
        return false;
    };
    if (!search(search, 0, 0)) return std::nullopt;
    return VertexColoring::from_colors(std::move(col));
}

}  // namespace

bool verify_proper(const Graph& g, const VertexColoring& col) {
    require_total(g, col);
    for (const auto& e : g.edges())
        if (col[e.u] == col[e.v]) return false;
    return true;
}

bool verify_acyclic(const Graph& g, const VertexColoring& col) {
    if (!verify_proper(g, col)) return false;
    for (const auto& [pair, ids] : edges_by_color_pair(g, col.colors())) {
        DisjointSets sets(g.num_vertices());
        for (int id : ids)
            if (!sets.unite(g.edge(id).u, g.edge(id).v)) return false;
    }
    return true;
}

bool verify_star(const Graph& g, const VertexColoring& col) {
    if (!verify_proper(g, col)) return false;
    auto c = col.colors();
    for (const auto& e : g.edges()) {
        // a - u - v - d with col[a] == col[v] and col[d] == col[u]
        if (has_color(g, c, e.u, e.v, c[e.v]) && has_color(g, c, e.v, e.u, c[e.u])) return false;
    }
    return true;
}

bool verify_star_by_components(const Graph& g, const VertexColoring& col) {
    if (!verify_proper(g, col)) return false;
    const int n = g.num_vertices();
    for (const auto& [pair, ids] : edges_by_color_pair(g, col.colors())) {
        DisjointSets sets(n);
        std::vector<int> degree(n, 0);
        for (int id : ids) {
            sets.unite(g.edge(id).u, g.edge(id).v);
            ++degree[g.edge(id).u];
            ++degree[g.edge(id).v];
        }
        std::map<int, int> vertices, edges, centers;
        for (Vertex v = 0; v < n; ++v) {
            if (degree[v] == 0) continue;
            int root = sets.find(v);
            ++vertices[root];
            if (degree[v] > 1) ++centers[root];
        }
        for (int id : ids) ++edges[sets.find(g.edge(id).u)];
        for (const auto& [root, count] : vertices) {
            if (edges[root] != count - 1 || centers[root] > 1) return false;
        }
    }
    return true;
}

std::optional<VertexColoring> exact_star_coloring(const Graph& g, int max_colors, int guard) {
    return backtrack_coloring(g, max_colors, guard, star_ok_at);
}

std::optional<VertexColoring> exact_acyclic_coloring(const Graph& g, int max_colors, int guard) {
    return backtrack_coloring(g, max_colors, guard, acyclic_ok_at);
}

VertexColoring greedy_star_coloring(const Graph& g, std::uint64_t seed) {
    const int n = g.num_vertices();
    std::vector<int> tie(n);
    std::iota(tie.begin(), tie.end(), 0);
    if (seed != 0) std::shuffle(tie.begin(), tie.end(), std::mt19937_64(seed));

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return tie[a] < tie[b];
    });

    std::vector<int> col(n, 0);
    for (Vertex v : order) {
        // A fresh color can never close a bicolored path, so this terminates.
        for (int c = 1;; ++c) {
            col[v] = c;
            if (star_ok_at(g, col, v)) break;
        }
    }
    VertexColoring result = VertexColoring::from_colors(std::move(col));
    if (!verify_star(g, result)) throw std::logic_error("greedy_star_coloring produced an invalid coloring");
    return result;
}

}  // namespace ectarget
