#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ectarget/bounds.hpp"
#include "ectarget/coloring.hpp"
#include "ectarget/density_orient.hpp"
#include "ectarget/error.hpp"
#include "ectarget/io.hpp"
#include "ectarget/out_coloring.hpp"
#include "ectarget/pipeline.hpp"
#include "ectarget/universal.hpp"

namespace ectarget::cli {

namespace {

using nlohmann::json;

// Search limits, optionally scaled by ECTARGET_GUARD_OVERRIDE=<factor>.
struct Guards {
    SearchLimits search;
    int exact_coloring = kExactColoringGuard;
    std::int64_t enumeration = kUniversalEnumerationGuard;
    std::int64_t explicit_target = 64;

    static Guards from_env() {
        Guards g;
        const char* raw = std::getenv("ECTARGET_GUARD_OVERRIDE");
        if (!raw || !*raw) return g;
        char* end = nullptr;
        long long factor = std::strtoll(raw, &end, 10);
        if (*end != '\0' || factor < 1) throw Error("ECTARGET_GUARD_OVERRIDE must be a positive integer factor");
        g.search = g.search.scaled(factor);
        g.exact_coloring = static_cast<int>(std::min<long long>(g.exact_coloring * factor, 1 << 20));
        g.enumeration *= factor;
        g.explicit_target *= factor;
        return g;
    }
};

struct Options {
    std::string format = "json";
    std::string output;
    std::uint64_t seed = 0;
};

// A target file holds either the compact header "target q d k" or an
// explicit edge-colored graph.
using AnyTarget = std::variant<UniversalTarget, EdgeColoredGraph>;

AnyTarget parse_target(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string word;
        fields >> word;
        if (word != "target") break;
        int q = 0, d = 0, k = 0;
        std::string extra;
        if (!(fields >> q >> d >> k) || (fields >> extra)) throw Error("expected 'target q d k'");
        return UniversalTarget(q, d, k);
    }
    return parse_edge_colored(text);
}

std::string compact_header(const UniversalTarget& t) {
    return "target " + std::to_string(t.q()) + " " + std::to_string(t.d()) + " " + std::to_string(t.k()) + "\n";
}

EdgeColoredGraph explicit_target(const AnyTarget& target, const Guards& guards) {
    if (auto* u = std::get_if<UniversalTarget>(&target)) return u->to_edge_colored(guards.explicit_target);
    return std::get<EdgeColoredGraph>(target);
}

json vertex_list(const std::vector<Vertex>& vs) { return json(vs); }

class Runner {
public:
    Runner(const Options& opts, const Guards& guards, std::ostream& out) : opts_(opts), guards_(guards), out_(out) {}

    // Emits the report; the artifact goes to --output when given, otherwise
    // it is embedded in the JSON report or printed as-is in text mode.
    int emit(json report, const std::string& artifact_key = {}, const std::string& artifact = {}, int code = kOk) {
        if (!artifact_key.empty() && !opts_.output.empty()) {
            write_file(opts_.output, artifact);
            report["output"] = opts_.output;
        } else if (!artifact_key.empty()) {
            report[artifact_key] = artifact;
        }
        if (opts_.format == "json") {
            out_ << report.dump(2) << '\n';
        } else {
            for (const auto& [key, value] : report.items()) {
                if (key == artifact_key) continue;
                out_ << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
            }
            if (!artifact_key.empty() && opts_.output.empty()) out_ << artifact;
        }
        return code;
    }

    int density(const std::string& path) {
        Graph g = parse_graph(read_file(path));
        Density d = densest_subgraph(g);
        if (Rational(count_induced_edges(g, d.witness), static_cast<std::int64_t>(d.witness.size())) != d.value)
            throw std::logic_error("density witness failed verification");
        return emit({{"density", to_string(d.value)}, {"witness", vertex_list(d.witness)}});
    }

    int orient(const std::string& path, std::optional<int> d) {
        Graph g = parse_graph(read_file(path));
        std::optional<EdgeColoredGraph> colors;
        try {
            colors = parse_edge_colored(read_file(path));
        } catch (const Error&) {
        }
        int bound = d ? *d : static_cast<int>(ectarget::ceil(densest_subgraph(g).value));
        auto result = find_orientation(g, bound);
        if (!result.feasible()) {
            const auto& s = result.violating_set;
            int edges = count_induced_edges(g, s);
            if (edges <= bound * static_cast<int>(s.size()))
                throw std::logic_error("infeasibility witness failed verification");
            return emit({{"feasible", false},
                         {"d", bound},
                         {"violating_set", vertex_list(s)},
                         {"violating_edges", edges}},
                        {}, {}, kNegative);
        }
        const OrientedGraph& o = *result.orientation;
        if (o.max_in_degree() > bound) throw std::logic_error("orientation failed verification");
        return emit({{"feasible", true}, {"d", bound}, {"max_in_degree", o.max_in_degree()}}, "orientation",
                    serialize(o, colors ? &*colors : nullptr));
    }

    int star_color(const std::string& path, std::optional<int> exact) {
        Graph g = parse_graph(read_file(path));
        std::optional<VertexColoring> col;
        if (exact) {
            col = exact_star_coloring(g, *exact, guards_.exact_coloring);
            if (!col) return emit({{"found", false}, {"max_colors", *exact}}, {}, {}, kNegative);
        } else {
            col = greedy_star_coloring(g, opts_.seed);
        }
        if (!verify_star(g, *col)) throw std::logic_error("star coloring failed verification");
        json report{{"found", true}, {"palette", col->palette()}, {"method", exact ? "exact" : "greedy"}};
        if (!exact) report["seed"] = opts_.seed;
        return emit(report, "coloring", serialize(*col));
    }

    int out_color(const std::string& path, const std::string& orientation_path, const std::string& target_path,
                  std::optional<int> k) {
        Graph g = parse_graph(read_file(path));
        OrientedGraph o = parse_oriented(read_file(orientation_path));
        if (!(o.graph() == g)) throw Error("orientation is over a different graph than " + path);
        std::optional<OutColoringCertificate> cert;
        json report;
        if (target_path.empty()) {
            VertexColoring star = greedy_star_coloring(g, opts_.seed);
            cert = build_out_coloring(o, star);
            report["method"] = "star";
            report["star_palette"] = star.palette();
        } else {
            EdgeColoredGraph target = explicit_target(parse_target(read_file(target_path)), guards_);
            try {
                cert = out_coloring_from_universal(o, target, k.value_or(target.k()), guards_.search);
            } catch (const NotUniversalError& e) {
                return emit({{"verified", false}, {"error", e.what()}}, "witness", serialize(e.witness()), kNegative);
            }
            report["method"] = "universal";
            report["target_vertices"] = target.num_vertices();
        }
        if (!verify_out_coloring(o, cert->coloring)) throw std::logic_error("out-coloring failed verification");
        report["verified"] = true;
        report["palette"] = cert->coloring.palette();
        report["budget"] = std::to_string(cert->budget);
        report["in_degree"] = cert->in_degree;
        report["aux_max_in_degree"] = cert->aux_max_in_degree;
        report["rule_counts"] = cert->rule_counts();
        return emit(report, "certificate", serialize(*cert));
    }

    int build_target(int q, int d, int k, bool explicit_graph) {
        if (explicit_graph) {
            UniversalTarget t = build_universal(q, d, k, guards_.enumeration);
            EdgeColoredGraph graph = t.to_edge_colored(guards_.explicit_target);
            return emit({{"q", t.q()}, {"d", t.d()}, {"k", t.k()}, {"vertices", std::to_string(t.size())}}, "target",
                        serialize(graph));
        }
        UniversalTarget t(q, d, k);
        if (t.size() != universal_size(q, std::min(d, q), k)) throw std::logic_error("target size mismatch");
        return emit({{"q", t.q()},
                     {"d", t.d()},
                     {"k", t.k()},
                     {"vertices", std::to_string(t.size())},
                     {"size_bound", to_string_big(BigInt(t.q()) * binomial(t.q(), t.d()) *
                                                  boost::multiprecision::pow(BigInt(k), t.d()))}},
                    "target", compact_header(t));
    }

    int map(const std::string& path, const std::string& target_path, std::optional<int> k_override) {
        EdgeColoredGraph g = parse_edge_colored(read_file(path));
        if (k_override) {
            if (*k_override < 2) throw Error("--k must be at least 2");
            std::vector<int> colors(g.colors().begin(), g.colors().end());
            g = EdgeColoredGraph(g.graph(), *k_override, std::move(colors));
        }
        PipelinePlan plan = plan_pipeline(g.graph(), g.k(), opts_.seed);
        UniversalTarget target = plan.target;
        if (!target_path.empty()) {
            auto given = parse_target(read_file(target_path));
            auto* u = std::get_if<UniversalTarget>(&given);
            if (!u) throw Error("map needs a compact 'target q d k' file");
            target = *u;
        }
        Homomorphism h = build_homomorphism(g, plan.orientation.orientation, plan.out.coloring, target);
        if (!verify_homomorphism(g, target, h)) throw std::logic_error("homomorphism failed verification");

        json images = json::array();
        for (auto id : h.image) images.push_back({{"id", std::to_string(id)}, {"tuple", target.tuple(id)}});
        json report{{"density", to_string(plan.density.value)},
                     {"d", plan.orientation.d},
                     {"orientation_max_in_degree", plan.orientation.orientation.max_in_degree()},
                     {"star_palette", plan.star.palette()},
                     {"out_palette", plan.out.coloring.palette()},
                     {"out_budget", std::to_string(plan.out.budget)},
                     {"aux_max_in_degree", plan.out.aux_max_in_degree},
                     {"rule_counts", plan.out.rule_counts()},
                     {"target", compact_header(target)},
                     {"target_vertices", std::to_string(target.size())},
                     {"homomorphism", images},
                     {"seed", opts_.seed},
                     {"verified", true}};
        if (!opts_.output.empty()) write_file(opts_.output, serialize(h));
        if (!opts_.output.empty()) report["output"] = opts_.output;
        return emit(report);
    }

    int verify(const std::string& graph_path, const std::string& target_path, const std::string& hom_path) {
        EdgeColoredGraph g = parse_edge_colored(read_file(graph_path));
        AnyTarget target = parse_target(read_file(target_path));
        Homomorphism h = parse_homomorphism(read_file(hom_path));
        bool ok = std::visit([&](const auto& t) { return verify_homomorphism(g, t, h); }, target);
        return emit({{"verified", ok}}, {}, {}, ok ? kOk : kNegative);
    }

    int check_universal_cmd(const std::string& target_path, const std::string& graph_path, int k) {
        EdgeColoredGraph target = explicit_target(parse_target(read_file(target_path)), guards_);
        Graph g = parse_graph(read_file(graph_path));
        auto result = check_universal(target, g, k, guards_.search);
        if (result.universal) return emit({{"universal", true}});
        return emit({{"universal", false}}, "counterexample", serialize(*result.counterexample), kNegative);
    }

    int min_target(const std::vector<std::string>& paths, int k, int max_p) {
        std::vector<Graph> graphs;
        for (const auto& p : paths) graphs.push_back(parse_graph(read_file(p)));
        auto result = min_universal_size(graphs, k, max_p, guards_.search);
        json lower = json::array();
        for (const auto& g : graphs) {
            auto bound = lemma3_lower(g, k);
            lower.push_back({{"exponent", to_string(bound.exponent)}, {"approx", bound.approx}});
        }
        if (!result) return emit({{"found", false}, {"max_p", max_p}, {"lower_bounds", lower}}, {}, {}, kNegative);
        for (const auto& g : graphs)
            if (!at_least(result->size, lemma3_lower(g, k)))
                throw std::logic_error("minimum target violates the density lower bound");
        return emit({{"found", true}, {"size", result->size}, {"lower_bounds", lower}}, "target",
                    serialize(result->target));
    }

    int bounds_planar(int k) {
        auto r = planar_bounds(k);
        return emit({{"lower", to_string_big(r.lower)},
                     {"upper", to_string_big(r.upper)},
                     {"r", r.r},
                     {"d", r.d},
                     {"k", r.k},
                     {"lower_formula", r.lower_formula},
                     {"upper_formula", r.upper_formula}});
    }

    int bounds_genus(std::int64_t g) {
        auto b = genus_density_bounds(g);
        return emit({{"lower", approx(b.lower)},
                     {"upper", approx(b.upper)},
                     {"lower_exact", "sqrt(" + std::to_string(b.radicand) + ")-1/2"},
                     {"upper_exact", "sqrt(" + std::to_string(b.radicand) + ")+3"},
                     {"t", b.t},
                     {"clique_genus", clique_genus(std::max<std::int64_t>(b.t, 3))}});
    }

    int bounds_theorem4(int r, int d, int k) {
        return emit({{"upper", to_string_big(theorem4_upper(r, d, k))}, {"r", r}, {"d", d}, {"k", k}});
    }

private:
    static std::string to_string_big(const BigInt& v) { return v.str(); }

    static std::string approx(double v) {
        std::ostringstream s;
        s.precision(15);
        s << v;
        return s.str();
    }

    const Options& opts_;
    const Guards& guards_;
    std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Universal targets for homomorphisms of edge-colored graphs", "ectarget"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("-o,--output", opts.output, "Write the constructed object to this file");
    app.add_option("--seed", opts.seed, "Seed for heuristic tie-breaking");

    std::string graph_path, target_path, orientation_path, hom_path;
    std::vector<std::string> graph_paths;
    std::optional<int> d_opt, exact_opt, k_opt;
    int q = 0, d = 0, k = 2, r = 0, max_p = 0;
    std::int64_t genus = 0;
    bool explicit_graph = false;

    auto* density = app.add_subcommand("density", "Exact maximum subgraph density");
    density->add_option("graph", graph_path)->required();

    auto* orient = app.add_subcommand("orient", "Orientation with bounded in-degree");
    orient->add_option("graph", graph_path)->required();
    orient->add_option("--d", d_opt, "In-degree bound (default: ceil of the density)");

    auto* star = app.add_subcommand("star-color", "Star coloring (greedy, or exact with --exact C)");
    star->add_option("graph", graph_path)->required();
    star->add_option("--exact", exact_opt, "Exact search with at most this many colors");

    auto* out_color = app.add_subcommand("out-color", "Out-coloring of an oriented graph");
    out_color->add_option("graph", graph_path)->required();
    out_color->add_option("--orientation", orientation_path)->required();
    out_color->add_option("--target", target_path, "Build from this universal target instead of a star coloring");
    out_color->add_option("--k", k_opt, "Edge palette (default: the target's)");

    auto* build = app.add_subcommand("build-target", "Universal target for given q, d, k");
    build->add_option("--q", q)->required();
    build->add_option("--d", d)->required();
    build->add_option("--k", k)->required();
    build->add_flag("--explicit", explicit_graph, "Emit the complete edge-colored graph");

    auto* map = app.add_subcommand("map", "Full pipeline: orient, star-color, out-color, target, homomorphism");
    map->add_option("graph", graph_path)->required();
    map->add_option("--target", target_path, "Compact target file to map into");
    map->add_option("--k", k_opt, "Edge palette (default: the graph file's)");

    auto* verify = app.add_subcommand("verify", "Check a homomorphism into a target");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("target", target_path)->required();
    verify->add_option("hom", hom_path)->required();

    auto* check = app.add_subcommand("check-universal", "Test a target against every k-edge-coloring of a graph");
    check->add_option("target", target_path)->required();
    check->add_option("--graph", graph_path)->required();
    check->add_option("--k", k)->required();

    auto* min_target = app.add_subcommand("min-target", "Smallest universal target by exhaustive search");
    min_target->add_option("graphs", graph_paths)->required();
    min_target->add_option("--k", k)->required();
    min_target->add_option("--max-p", max_p)->required();

    auto* bounds = app.add_subcommand("bounds", "Closed-form bounds");
    bounds->require_subcommand(1);
    auto* planar = bounds->add_subcommand("planar", "Planar graphs");
    planar->add_option("--k", k)->required();
    auto* genus_cmd = bounds->add_subcommand("genus", "Density bounds for genus g");
    genus_cmd->add_option("--g", genus)->required();
    auto* theorem4 = bounds->add_subcommand("theorem4", "8dr^4 C(8dr^4, d) k^d");
    theorem4->add_option("--r", r)->required();
    theorem4->add_option("--d", d)->required();
    theorem4->add_option("--k", k)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "ectarget: " << e.what() << '\n';
        return kUsage;
    }

    try {
        Guards guards = Guards::from_env();
        Runner runner(opts, guards, out);
        if (*density) return runner.density(graph_path);
        if (*orient) return runner.orient(graph_path, d_opt);
        if (*star) return runner.star_color(graph_path, exact_opt);
        if (*out_color) return runner.out_color(graph_path, orientation_path, target_path, k_opt);
        if (*build) return runner.build_target(q, d, k, explicit_graph);
        if (*map) return runner.map(graph_path, target_path, k_opt);
        if (*verify) return runner.verify(graph_path, target_path, hom_path);
        if (*check) return runner.check_universal_cmd(target_path, graph_path, k);
        if (*min_target) return runner.min_target(graph_paths, k, max_p);
        if (*planar) return runner.bounds_planar(k);
        if (*genus_cmd) return runner.bounds_genus(genus);
        if (*theorem4) return runner.bounds_theorem4(r, d, k);
    } catch (const GuardExceeded& e) {
        err << "ectarget: guard exceeded: " << e.what() << " (set ECTARGET_GUARD_OVERRIDE to raise; may be slow)\n";
        return kGuard;
    } catch (const Error& e) {
        err << "ectarget: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "ectarget: internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}

}  // namespace ectarget::cli
