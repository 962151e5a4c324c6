#include "ectarget/density_orient.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "ectarget/coloring.hpp"
#include "ectarget/error.hpp"
#include "max_flow.hpp"

namespace ectarget {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t ceil(const Rational& value) {
    std::int64_t q = value.numerator() / value.denominator();
    if (value.numerator() % value.denominator() != 0 && value.numerator() > 0) ++q;
    return q;
}

namespace {

// Network: source -> edge node (cap edge_cap), edge node -> both endpoints
// (unbounded), vertex -> sink (cap vertex_cap). Saturation of every source
// arc means every edge subset E' satisfies edge_cap*|E'| <= vertex_cap*|V(E')|.
struct EdgeVertexNetwork {
    detail::MaxFlow flow;
    int source;
    int sink;
    int m;
    std::vector<int> to_u_arc;
    std::vector<int> to_v_arc;
    detail::MaxFlow::Cap total;

    EdgeVertexNetwork(const Graph& g, detail::MaxFlow::Cap edge_cap, detail::MaxFlow::Cap vertex_cap)
        : flow(g.num_edges() + g.num_vertices() + 2),
          source(g.num_edges() + g.num_vertices()),
          sink(source + 1),
          m(g.num_edges()) {
        for (int id = 0; id < m; ++id) {
            const auto& e = g.edge(id);
            flow.add_arc(source, id, edge_cap);
            to_u_arc.push_back(flow.add_arc(id, m + e.u, detail::MaxFlow::kInfinite));
            to_v_arc.push_back(flow.add_arc(id, m + e.v, detail::MaxFlow::kInfinite));
        }
        for (Vertex v = 0; v < g.num_vertices(); ++v) flow.add_arc(m + v, sink, vertex_cap);
        total = flow.run(source, sink);
    }

    std::vector<Vertex> source_side_vertices(int n) const {
        auto side = flow.source_side(source);
        std::vector<Vertex> out;
        for (Vertex v = 0; v < n; ++v)
            if (side[m + v]) out.push_back(v);
        return out;
    }
};

bool density_at_most(const Graph& g, const Rational& bound) {
    EdgeVertexNetwork net(g, bound.denominator(), bound.numerator());
    return net.total == bound.denominator() * g.num_edges();
}

}  // namespace

Density densest_subgraph(const Graph& g) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    if (m == 0) return {Rational(0), {0}};

    std::vector<Rational> candidates;
    for (std::int64_t v = 1; v <= n; ++v) {
        std::int64_t max_e = std::min<std::int64_t>(m, v * (v - 1) / 2);
        for (std::int64_t e = 0; e <= max_e; ++e) candidates.emplace_back(e, v);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // candidates[0] == 0 is infeasible since m > 0; the last is always feasible.
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (density_at_most(g, candidates[mid]))
            hi = mid;
        else
            lo = mid;
    }

    // Just below the optimum the min cut isolates a subgraph denser than
    // candidates[lo]; no candidate lies strictly between, so it is optimal.
    const Rational& below = candidates[lo];
    EdgeVertexNetwork net(g, below.denominator(), below.numerator());
    Density result{candidates[hi], net.source_side_vertices(n)};
    if (result.witness.empty() ||
        Rational(count_induced_edges(g, result.witness), static_cast<std::int64_t>(result.witness.size())) !=
            result.value)
        throw std::logic_error("densest_subgraph: witness does not attain the density");
    return result;
}

OrientationResult find_orientation(const Graph& g, int d) {
    if (d < 0) throw Error("in-degree bound must be nonnegative");
    EdgeVertexNetwork net(g, 1, d);
    if (net.total == g.num_edges()) {
        std::vector<Vertex> heads(g.num_edges());
        for (int id = 0; id < g.num_edges(); ++id)
            heads[id] = net.flow.flow(net.to_u_arc[id]) > 0 ? g.edge(id).u : g.edge(id).v;
        return {OrientedGraph(g, std::move(heads)), {}};
    }
    return {std::nullopt, net.source_side_vertices(g.num_vertices())};
}

MinOrientation min_orientation(const Graph& g) {
    int d = static_cast<int>(ceil(densest_subgraph(g).value));
    auto result = find_orientation(g, d);
    if (!result.feasible()) throw std::logic_error("min_orientation: ceil(D(G))-orientation not found");
    return {d, std::move(*result.orientation)};
}

OrientedGraph orientation_from_acyclic(const Graph& g, const VertexColoring& col) {
    require_total(g, col);
    if (!verify_acyclic(g, col)) throw Error("coloring is not acyclic");

    std::map<std::pair<int, int>, std::vector<int>> by_pair;
    for (int id = 0; id < g.num_edges(); ++id) {
        int a = col[g.edge(id).u], b = col[g.edge(id).v];
        by_pair[{std::min(a, b), std::max(a, b)}].push_back(id);
    }

    std::vector<Vertex> heads(g.num_edges(), -1);
    std::vector<int> stamp(g.num_vertices(), -1);
    std::vector<char> visited(g.num_vertices(), 0);
    int round = 0;
    for (const auto& [pair, ids] : by_pair) {
        ++round;
        std::vector<Vertex> members;
        for (int id : ids) {
            for (Vertex v : {g.edge(id).u, g.edge(id).v}) {
                if (stamp[v] != round) {
                    stamp[v] = round;
                    visited[v] = 0;
                    members.push_back(v);
                }
            }
        }
        std::sort(members.begin(), members.end());
        auto in_pair = [&](Vertex v) { return col[v] == pair.first || col[v] == pair.second; };

        for (Vertex root : members) {
            if (visited[root]) continue;
            visited[root] = 1;
            std::queue<Vertex> queue;
            queue.push(root);
            while (!queue.empty()) {
                Vertex v = queue.front();
                queue.pop();
                auto nb = g.neighbors(v);
                auto ids_v = g.incident_edges(v);
                for (std::size_t i = 0; i < nb.size(); ++i) {
                    if (!in_pair(nb[i]) || heads[ids_v[i]] != -1) continue;
                    heads[ids_v[i]] = nb[i];
                    visited[nb[i]] = 1;
                    queue.push(nb[i]);
                }
            }
        }
    }
    return OrientedGraph(g, std::move(heads));
}

}  // namespace ectarget
