#include "ectarget/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "ectarget/error.hpp"

namespace ectarget {

namespace {

struct Line {
    int number;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    while (!text.empty()) {
        ++number;
        auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
            if (j > i) line.tokens.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
        lines.push_back(std::move(line));
    }
    return lines;
}

long long to_int(const Line& line, std::size_t index, const char* what) {
    std::string_view tok = line.tokens[index];
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line.number, std::string("expected integer ") + what + ", got '" +
                                          std::string(tok) + "'");
    return value;
}

int to_small_int(const Line& line, std::size_t index, const char* what) {
    long long v = to_int(line, index, what);
    if (v < -(1LL << 30) || v > (1LL << 30))
        throw ParseError(line.number, std::string(what) + " out of range");
    return static_cast<int>(v);
}

struct RawGraph {
    int n = 0;
    int k = 0;
    std::vector<ColoredEdge> edges;
    std::vector<char> forward;  // direction flag: tail is the first id
};

RawGraph parse_raw(std::string_view text, bool directed, int min_k) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(0, "missing header 'n m k'");
    const Line& header = lines.front();
    if (header.tokens.size() != 3) throw ParseError(header.number, "malformed header, expected 'n m k'");
    RawGraph raw;
    raw.n = to_small_int(header, 0, "n");
    int m = to_small_int(header, 1, "m");
    raw.k = to_small_int(header, 2, "k");
    if (raw.n < 1) throw ParseError(header.number, "malformed header, n must be at least 1");
    if (m < 0) throw ParseError(header.number, "malformed header, m must be nonnegative");
    if (raw.k < min_k)
        throw ParseError(header.number,
                         "malformed header, k must be at least " + std::to_string(min_k));
    if (static_cast<int>(lines.size()) - 1 != m)
        throw ParseError(header.number, "header declares " + std::to_string(m) + " edges, found " +
                                            std::to_string(lines.size() - 1));

    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        std::size_t expected = directed ? 4 : 3;
        if (line.tokens.size() != expected)
            throw ParseError(line.number, directed ? "expected 'u v c >' or 'u v c <'"
                                                   : "expected 'u v c'");
        int u = to_small_int(line, 0, "u");
        int v = to_small_int(line, 1, "v");
        int c = to_small_int(line, 2, "c");
        if (u < 0 || v < 0 || u >= raw.n || v >= raw.n)
            throw ParseError(line.number, "vertex id outside 0.." + std::to_string(raw.n - 1));
        if (u == v) throw ParseError(line.number, "loop at vertex " + std::to_string(u));
        if (c < 1 || c > raw.k)
            throw ParseError(line.number,
                             "color " + std::to_string(c) + " outside 1.." + std::to_string(raw.k));
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw ParseError(line.number, "duplicate edge {" + std::to_string(u) + "," +
                                              std::to_string(v) + "}");
        if (directed) {
            std::string_view flag = line.tokens[3];
            if (flag != ">" && flag != "<")
                throw ParseError(line.number, "direction flag must be '>' or '<'");
            raw.forward.push_back(flag == ">");
        }
        raw.edges.push_back({u, v, c});
    }
    return raw;
}

Graph plain_graph(const RawGraph& raw) {
    std::vector<Edge> edges;
    for (const auto& e : raw.edges) edges.push_back({e.u, e.v});
    return Graph(raw.n, std::move(edges));
}

}  // namespace

EdgeColoredGraph parse_edge_colored(std::string_view text) {
    RawGraph raw = parse_raw(text, false, 2);
    Graph g = plain_graph(raw);
    std::vector<int> colors(raw.edges.size());
    for (const auto& e : raw.edges) colors[*g.edge_id(e.u, e.v)] = e.color;
    return EdgeColoredGraph(std::move(g), raw.k, std::move(colors));
}

Graph parse_graph(std::string_view text) { return plain_graph(parse_raw(text, false, 1)); }

OrientedGraph parse_oriented(std::string_view text) {
    RawGraph raw = parse_raw(text, true, 1);
    Graph g = plain_graph(raw);
    std::vector<Vertex> heads(raw.edges.size());
    for (std::size_t i = 0; i < raw.edges.size(); ++i) {
        const auto& e = raw.edges[i];
        heads[*g.edge_id(e.u, e.v)] = raw.forward[i] ? e.v : e.u;
    }
    return OrientedGraph(std::move(g), std::move(heads));
}

VertexColoring parse_coloring(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty() || lines.front().tokens.size() != 2 || lines.front().tokens[0] != "palette")
        throw ParseError(lines.empty() ? 0 : lines.front().number, "expected header 'palette q'");
    int palette = to_small_int(lines.front(), 1, "palette");
    int n = static_cast<int>(lines.size()) - 1;
    std::vector<int> colors(n, 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'v c'");
        int v = to_small_int(line, 0, "v");
        int c = to_small_int(line, 1, "c");
        if (v < 0 || v >= n) throw ParseError(line.number, "vertex id outside 0.." + std::to_string(n - 1));
        if (colors[v] != 0) throw ParseError(line.number, "vertex " + std::to_string(v) + " colored twice");
        if (c < 1 || c > palette)
            throw ParseError(line.number, "color outside 1.." + std::to_string(palette));
        colors[v] = c;
    }
    if (palette < 1) throw ParseError(lines.front().number, "palette must be at least 1");
    return VertexColoring(palette, std::move(colors));
}

Homomorphism parse_homomorphism(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty() || lines.front().tokens.size() != 2 || lines.front().tokens[0] != "hom")
        throw ParseError(lines.empty() ? 0 : lines.front().number, "expected header 'hom n'");
    int n = to_small_int(lines.front(), 1, "n");
    if (static_cast<int>(lines.size()) - 1 != n)
        throw ParseError(lines.front().number, "header declares " + std::to_string(n) + " vertices");
    Homomorphism h{std::vector<std::int64_t>(n, -1)};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'v t'");
        int v = to_small_int(line, 0, "v");
        long long t = to_int(line, 1, "t");
        if (v < 0 || v >= n) throw ParseError(line.number, "vertex id outside 0.." + std::to_string(n - 1));
        if (h.image[v] != -1) throw ParseError(line.number, "vertex " + std::to_string(v) + " mapped twice");
        if (t < 0) throw ParseError(line.number, "target id must be nonnegative");
        h.image[v] = t;
    }
    return h;
}

std::string serialize(const EdgeColoredGraph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << ' ' << g.k() << '\n';
    for (int id = 0; id < g.num_edges(); ++id) {
        const auto& e = g.graph().edge(id);
        out << e.u << ' ' << e.v << ' ' << g.color(id) << '\n';
    }
    return out.str();
}

std::string serialize(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << " 1\n";
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << " 1\n";
    return out.str();
}

std::string serialize(const OrientedGraph& g, const EdgeColoredGraph* colors) {
    if (colors && !(colors->graph() == g.graph()))
        throw Error("edge coloring and orientation are over different graphs");
    std::ostringstream out;
    const Graph& base = g.graph();
    out << base.num_vertices() << ' ' << base.num_edges() << ' ' << (colors ? colors->k() : 1) << '\n';
    for (int id = 0; id < base.num_edges(); ++id) {
        const auto& e = base.edge(id);
        out << e.u << ' ' << e.v << ' ' << (colors ? colors->color(id) : 1) << ' '
            << (g.tail(id) == e.u ? '>' : '<') << '\n';
    }
    return out.str();
}

std::string serialize(const VertexColoring& col) {
    std::ostringstream out;
    out << "palette " << col.palette() << '\n';
    for (int v = 0; v < col.size(); ++v) out << v << ' ' << col[v] << '\n';
    return out.str();
}

std::string serialize(const Homomorphism& h) {
    std::ostringstream out;
    out << "hom " << h.image.size() << '\n';
    for (std::size_t v = 0; v < h.image.size(); ++v) out << v << ' ' << h.image[v] << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

}  // namespace ectarget
