#include "ectarget/universal.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "ectarget/error.hpp"
#include "ectarget/out_coloring.hpp"

namespace ectarget {

namespace {

using Id = UniversalTarget::Id;
constexpr Id kMaxTargetSize = Id{1} << 62;

Id checked_mul(Id a, Id b) {
    Id out;
    if (__builtin_mul_overflow(a, b, &out) || out > kMaxTargetSize)
        throw Error("universal target too large to index");
    return out;
}

Id checked_add(Id a, Id b) {
    Id out;
    if (__builtin_add_overflow(a, b, &out) || out > kMaxTargetSize)
        throw Error("universal target too large to index");
    return out;
}

}  // namespace

UniversalTarget::UniversalTarget(int q, int d, int k) : q_(q), d_(std::min(d, q)), k_(k) {
    if (q < 1) throw Error("target out-color count q must be at least 1");
    if (d < 0) throw Error("target in-degree bound d must be nonnegative");
    if (k < 2) throw Error("target edge palette k must be at least 2");

    completions_.assign(q_ + 1, std::vector<Id>(d_ + 1, 1));
    for (int len = 1; len <= q_; ++len) {
        for (int budget = 0; budget <= d_; ++budget) {
            Id count = completions_[len - 1][budget];
            if (budget > 0) count = checked_add(count, checked_mul(k_ - 1, completions_[len - 1][budget - 1]));
            completions_[len][budget] = count;
        }
    }
    size_ = checked_mul(q_, completions_[q_][d_]);
}

std::vector<int> UniversalTarget::tuple(Id id) const {
    if (id < 0 || id >= size_) throw Error("target vertex id " + std::to_string(id) + " out of range");
    if (materialized()) {
        auto first = table_.begin() + id * (q_ + 1);
        return std::vector<int>(first, first + q_ + 1);
    }
    std::vector<int> t(q_ + 1);
    const Id block = completions_[q_][d_];
    t[0] = static_cast<int>(id / block) + 1;
    Id rest = id % block;
    int budget = d_;
    for (int pos = 1; pos <= q_; ++pos) {
        const int remaining = q_ - pos;
        const Id non_k = budget > 0 ? completions_[remaining][budget - 1] : 0;
        // Values 1..k-1 each cover non_k ids; value k covers the rest.
        if (non_k > 0 && rest < non_k * (k_ - 1)) {
            t[pos] = static_cast<int>(rest / non_k) + 1;
            rest %= non_k;
            --budget;
        } else {
            t[pos] = k_;
            rest -= non_k * (k_ - 1);
        }
    }
    return t;
}

bool UniversalTarget::is_vertex(std::span<const int> t) const {
    if (static_cast<int>(t.size()) != q_ + 1) return false;
    if (t[0] < 1 || t[0] > q_) return false;
    int non_k = 0;
    for (int pos = 1; pos <= q_; ++pos) {
        if (t[pos] < 1 || t[pos] > k_) return false;
        non_k += t[pos] != k_;
    }
    return non_k <= d_;
}

UniversalTarget::Id UniversalTarget::id_of(std::span<const int> t) const {
    if (!is_vertex(t)) throw Error("tuple is not a vertex of the target");
    Id id = static_cast<Id>(t[0] - 1) * completions_[q_][d_];
    int budget = d_;
    for (int pos = 1; pos <= q_; ++pos) {
        if (t[pos] != k_) {
            id += static_cast<Id>(t[pos] - 1) * completions_[q_ - pos][budget - 1];
            --budget;
        } else {
            id += static_cast<Id>(k_ - 1) * (budget > 0 ? completions_[q_ - pos][budget - 1] : 0);
        }
    }
    return id;
}

int UniversalTarget::edge_color(std::span<const int> u, std::span<const int> v) {
    if (std::equal(u.begin(), u.end(), v.begin(), v.end())) throw Error("target has no loops");
    return std::min(v[u[0]], u[v[0]]);
}

int UniversalTarget::edge_color(Id a, Id b) const {
    if (a == b) throw Error("target has no loops");
    return edge_color(tuple(a), tuple(b));
}

EdgeColoredGraph UniversalTarget::to_edge_colored(Id max_vertices) const {
    if (size_ > max_vertices)
        throw GuardExceeded("explicit target limited to " + std::to_string(max_vertices) + " vertices, target has " +
                            std::to_string(size_));
    const int p = static_cast<int>(size_);
    std::vector<std::vector<int>> tuples;
    for (int v = 0; v < p; ++v) tuples.push_back(tuple(v));
    std::vector<ColoredEdge> edges;
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) edges.push_back({a, b, edge_color(tuples[a], tuples[b])});
    return EdgeColoredGraph(p, k_, std::move(edges));
}

std::int64_t universal_size(int q, int d, int k) {
    using boost::multiprecision::cpp_int;
    if (q < 1 || d < 0 || k < 2) throw Error("universal_size needs q >= 1, d >= 0, k >= 2");
    cpp_int sum = 0;
    cpp_int binom = 1;  // C(q, j)
    cpp_int power = 1;  // (k-1)^j
    for (int j = 0; j <= std::min(d, q); ++j) {
        sum += binom * power;
        binom = binom * (q - j) / (j + 1);
        power *= k - 1;
    }
    cpp_int total = sum * q;
    if (total > cpp_int(kMaxTargetSize)) throw Error("universal target too large to index");
    return total.convert_to<std::int64_t>();
}

UniversalTarget build_universal(int q, int d, int k, UniversalTarget::Id max_vertices) {
    UniversalTarget target(q, d, k);
    if (target.size() > max_vertices)
        throw GuardExceeded("target enumeration limited to " + std::to_string(max_vertices) +
                            " vertices, target has " + std::to_string(target.size()));
    std::vector<int> table;
    table.reserve(target.size() * (q + 1));
    for (Id id = 0; id < target.size(); ++id) {
        auto t = target.tuple(id);
        table.insert(table.end(), t.begin(), t.end());
    }
    target.table_ = std::move(table);
    return target;
}

Homomorphism build_homomorphism(const EdgeColoredGraph& g, const OrientedGraph& orientation,
                                const VertexColoring& out_coloring, const UniversalTarget& target) {
    if (!(orientation.graph() == g.graph())) throw Error("orientation is over a different graph");
    require_total(g.graph(), out_coloring);
    if (g.k() != target.k())
        throw Error("graph edge palette k=" + std::to_string(g.k()) + " differs from target k=" +
                    std::to_string(target.k()));
    if (out_coloring.palette() > target.q())
        throw Error("out-coloring palette " + std::to_string(out_coloring.palette()) + " exceeds target q=" +
                    std::to_string(target.q()));
    if (orientation.max_in_degree() > target.d())
        throw Error("orientation in-degree " + std::to_string(orientation.max_in_degree()) +
                    " exceeds target d=" + std::to_string(target.d()));
    if (!verify_out_coloring(orientation, out_coloring))
        throw Error("coloring is not an out-coloring of the orientation");

    const Graph& base = g.graph();
    Homomorphism h;
    h.image.reserve(base.num_vertices());
    std::vector<int> t(target.q() + 1);
    for (Vertex u = 0; u < base.num_vertices(); ++u) {
        std::fill(t.begin(), t.end(), target.k());
        t[0] = out_coloring[u];
        for (Vertex p : orientation.parents(u)) t[out_coloring[p]] = g.color(*base.edge_id(u, p));
        h.image.push_back(target.id_of(t));
    }
    if (!verify_homomorphism(g, target, h))
        throw std::logic_error("build_homomorphism: constructed map is not a homomorphism");
    return h;
}

bool verify_homomorphism(const EdgeColoredGraph& source, const EdgeColoredGraph& target,
                         const Homomorphism& h) {
    if (static_cast<int>(h.image.size()) != source.num_vertices()) return false;
    for (auto t : h.image)
        if (t < 0 || t >= target.num_vertices()) return false;
    for (int id = 0; id < source.num_edges(); ++id) {
        const auto& e = source.graph().edge(id);
        auto a = static_cast<Vertex>(h.image[e.u]);
        auto b = static_cast<Vertex>(h.image[e.v]);
        auto image = target.graph().edge_id(a, b);
        if (!image || target.color(*image) != source.color(id)) return false;
    }
    return true;
}

bool verify_homomorphism(const EdgeColoredGraph& source, const UniversalTarget& target,
                         const Homomorphism& h) {
    if (static_cast<int>(h.image.size()) != source.num_vertices()) return false;
    std::vector<std::vector<int>> tuples;
    tuples.reserve(h.image.size());
    for (auto t : h.image) {
        if (t < 0 || t >= target.size()) return false;
        tuples.push_back(target.tuple(t));
    }
    for (int id = 0; id < source.num_edges(); ++id) {
        const auto& e = source.graph().edge(id);
        if (h.image[e.u] == h.image[e.v]) return false;
        if (UniversalTarget::edge_color(tuples[e.u], tuples[e.v]) != source.color(id)) return false;
    }
    return true;
}

SearchLimits SearchLimits::scaled(std::int64_t factor) const {
    auto scale = [factor](std::int64_t v) {
        std::int64_t out;
        if (__builtin_mul_overflow(v, factor, &out)) return std::numeric_limits<std::int64_t>::max() / 2;
        return out;
    };
    auto scale_int = [&](int v) {
        return static_cast<int>(std::min<std::int64_t>(scale(v), std::numeric_limits<int>::max() / 2));
    };
    SearchLimits out;
    out.max_source_vertices = scale_int(max_source_vertices);
    out.max_target_vertices = scale_int(max_target_vertices);
    out.max_colorings = scale(max_colorings);
    out.max_candidate_targets = scale(max_candidate_targets);
    return out;
}

namespace {

using Bits = boost::dynamic_bitset<>;

// Target adjacency by color, reused across many sources.
class HomomorphismSearch {
public:
    explicit HomomorphismSearch(const EdgeColoredGraph& target)
        : p_(target.num_vertices()), k_(target.k()), by_color_(p_, std::vector<Bits>(k_ + 1, Bits(p_))) {
        for (int id = 0; id < target.num_edges(); ++id) {
            const auto& e = target.graph().edge(id);
            by_color_[e.u][target.color(id)].set(e.v);
            by_color_[e.v][target.color(id)].set(e.u);
        }
    }

    std::optional<Homomorphism> find(const EdgeColoredGraph& source) const {
        const Graph& g = source.graph();
        const int n = g.num_vertices();
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

        std::vector<Bits> domains(n, Bits(p_));
        for (auto& dom : domains) dom.set();
        for (int id = 0; id < source.num_edges(); ++id) {
            if (source.color(id) > k_) return std::nullopt;
        }
        std::vector<std::int64_t> image(n, -1);
        if (!search(source, order, 0, domains, image)) return std::nullopt;
        return Homomorphism{std::move(image)};
    }

private:
    bool search(const EdgeColoredGraph& source, const std::vector<Vertex>& order, int pos,
                std::vector<Bits>& domains, std::vector<std::int64_t>& image) const {
        if (pos == static_cast<int>(order.size())) return true;
        const Graph& g = source.graph();
        Vertex v = order[pos];
        for (auto t = domains[v].find_first(); t != Bits::npos; t = domains[v].find_next(t)) {
            image[v] = static_cast<std::int64_t>(t);
            std::vector<std::pair<Vertex, Bits>> saved;
            bool wiped = false;
            auto nb = g.neighbors(v);
            auto ids = g.incident_edges(v);
            for (std::size_t i = 0; i < nb.size() && !wiped; ++i) {
                if (image[nb[i]] >= 0) continue;
                saved.emplace_back(nb[i], domains[nb[i]]);
                domains[nb[i]] &= by_color_[t][source.color(ids[i])];
                wiped = domains[nb[i]].none();
            }
            if (!wiped && search(source, order, pos + 1, domains, image)) return true;
            for (auto it = saved.rbegin(); it != saved.rend(); ++it) domains[it->first] = std::move(it->second);
        }
        image[v] = -1;
        return false;
    }

    int p_;
    int k_;
    std::vector<std::vector<Bits>> by_color_;
};

void check_search_size(const EdgeColoredGraph& source, const EdgeColoredGraph& target, const SearchLimits& limits) {
    if (source.num_vertices() > limits.max_source_vertices)
        throw GuardExceeded("homomorphism search limited to " + std::to_string(limits.max_source_vertices) +
                            " source vertices, source has " + std::to_string(source.num_vertices()));
    if (target.num_vertices() > limits.max_target_vertices)
        throw GuardExceeded("homomorphism search limited to " + std::to_string(limits.max_target_vertices) +
                            " target vertices, target has " + std::to_string(target.num_vertices()));
}

// k^exponent, or nullopt if it exceeds limit.
std::optional<std::int64_t> bounded_power(int k, std::int64_t exponent, std::int64_t limit) {
    std::int64_t value = 1;
    for (std::int64_t i = 0; i < exponent; ++i) {
        if (value > limit / k) return std::nullopt;
        value *= k;
    }
    return value;
}

std::vector<EdgeColoredGraph> all_edge_colorings(const Graph& g, int k, const SearchLimits& limits) {
    if (k < 2) throw Error("edge palette k must be at least 2");
    auto count = bounded_power(k, g.num_edges(), limits.max_colorings);
    if (!count)
        throw GuardExceeded("coloring enumeration limited to " + std::to_string(limits.max_colorings) + ", graph has " +
                            std::to_string(k) + "^" + std::to_string(g.num_edges()));
    std::vector<EdgeColoredGraph> out;
    out.reserve(*count);
    std::vector<int> colors(g.num_edges(), 1);
    for (;;) {
        out.emplace_back(g, k, colors);
        int pos = g.num_edges() - 1;
        while (pos >= 0 && colors[pos] == k) colors[pos--] = 1;
        if (pos < 0) break;
        ++colors[pos];
    }
    return out;
}

bool has_smaller_relabeling(const std::vector<int>& code, int p, int k) {
    // True when some relabeling of vertices and colors gives a smaller code.
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> colors(k);
    std::iota(colors.begin(), colors.end(), 1);
    auto pair_index = [p](int a, int b) {
        if (a > b) std::swap(a, b);
        return a * p - a * (a + 1) / 2 + (b - a - 1);
    };
    do {
        std::vector<int> relabel(k + 1);
        do {
            for (int c = 0; c < k; ++c) relabel[c + 1] = colors[c];
            // Compare relabeled code to the original, pair by pair.
            for (int a = 0, idx = 0; a < p; ++a) {
                bool decided = false;
                for (int b = a + 1; b < p; ++b, ++idx) {
                    int value = relabel[code[pair_index(perm[a], perm[b])]];
                    if (value < code[idx]) return true;
                    if (value > code[idx]) {
                        decided = true;
                        break;
                    }
                }
                if (decided) break;
            }
        } while (std::next_permutation(colors.begin(), colors.end()));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

std::optional<Homomorphism> find_homomorphism(const EdgeColoredGraph& source, const EdgeColoredGraph& target,
                                              const SearchLimits& limits) {
    check_search_size(source, target, limits);
    auto h = HomomorphismSearch(target).find(source);
    if (h && !verify_homomorphism(source, target, *h))
        throw std::logic_error("find_homomorphism: search returned an invalid map");
    return h;
}

UniversalityCheck check_universal(const EdgeColoredGraph& target, const Graph& g, int k,
                                  const SearchLimits& limits) {
    auto colorings = all_edge_colorings(g, k, limits);
    check_search_size(colorings.front(), target, limits);
    HomomorphismSearch search(target);
    for (auto& colored : colorings) {
        if (!search.find(colored)) return {false, std::move(colored)};
    }
    return {true, std::nullopt};
}

std::optional<MinUniversal> min_universal_size(std::span<const Graph> graphs, int k, int max_vertices,
                                               const SearchLimits& limits) {
    if (graphs.empty()) throw Error("min_universal_size needs at least one graph");
    if (max_vertices < 1) throw Error("target size bound must be at least 1");
    if (max_vertices > limits.max_target_vertices)
        throw GuardExceeded("target size bound exceeds " + std::to_string(limits.max_target_vertices));
    const std::int64_t pairs = static_cast<std::int64_t>(max_vertices) * (max_vertices - 1) / 2;
    if (!bounded_power(k, pairs, limits.max_candidate_targets))
        throw GuardExceeded("candidate targets on " + std::to_string(max_vertices) + " vertices exceed " +
                            std::to_string(limits.max_candidate_targets));

    std::vector<EdgeColoredGraph> sources;
    for (const auto& g : graphs) {
        if (g.num_vertices() > limits.max_source_vertices)
            throw GuardExceeded("source graph has more than " + std::to_string(limits.max_source_vertices) +
                                " vertices");
        auto colorings = all_edge_colorings(g, k, limits);
        sources.insert(sources.end(), colorings.begin(), colorings.end());
    }

    // Adding an edge never breaks a homomorphism, so only complete targets
    // need to be searched; colors and vertices are pruned up to relabeling.
    for (int p = 1; p <= max_vertices; ++p) {
        const int count = p * (p - 1) / 2;
        std::vector<int> code(count, 1);
        for (;;) {
            if (!has_smaller_relabeling(code, p, k)) {
                std::vector<ColoredEdge> edges;
                for (int a = 0, idx = 0; a < p; ++a)
                    for (int b = a + 1; b < p; ++b, ++idx) edges.push_back({a, b, code[idx]});
                EdgeColoredGraph target(p, k, std::move(edges));
                HomomorphismSearch search(target);
                bool universal = std::all_of(sources.begin(), sources.end(),
                                             [&](const EdgeColoredGraph& s) { return search.find(s).has_value(); });
                if (universal) return MinUniversal{p, std::move(target)};
            }
            int pos = count - 1;
            while (pos >= 0 && code[pos] == k) code[pos--] = 1;
            if (pos < 0) break;
            ++code[pos];
        }
    }
    return std::nullopt;
}

}  // namespace ectarget
