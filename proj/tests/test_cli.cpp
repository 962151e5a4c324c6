#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "ectarget/io.hpp"
#include "ectarget/universal.hpp"

using namespace ectarget;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("ectarget_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }

    std::string file(const std::string& name, const std::string& content) const {
        auto p = (path_ / name).string();
        std::ofstream(p) << content;
        return p;
    }
    std::string path(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

const std::string kK4 = "4 6 2\n0 1 1\n0 2 2\n0 3 1\n1 2 2\n1 3 1\n2 3 2\n";
const std::string kTriangle = "# triangle\n3 3 2\n0 1 1\n1 2 2\n0 2 1\n";

}  // namespace

TEST_CASE("cli density of K4") {
    TempDir dir;
    auto r = run_cli({"density", dir.file("k4.g", kK4)});
    CHECK(r.code == cli::kOk);
    CHECK(json::parse(r.out) == json::parse(R"({"density":"3/2","witness":[0,1,2,3]})"));
}

TEST_CASE("cli map of a triangle verifies") {
    TempDir dir;
    auto g = dir.file("triangle.ecg", kTriangle);
    auto hom = dir.path("triangle.hom");
    auto r = run_cli({"map", g, "--k", "2", "--output", hom});
    REQUIRE(r.code == cli::kOk);
    auto report = json::parse(r.out);
    CHECK(report["verified"] == true);
    CHECK(report["target"].get<std::string>().rfind("target ", 0) == 0);
    CHECK(report["homomorphism"].size() == 3);

    auto target = dir.file("triangle.target", report["target"].get<std::string>());
    auto v = run_cli({"verify", g, target, hom});
    CHECK(v.code == cli::kOk);
    CHECK(json::parse(v.out)["verified"] == true);

    // Mapping every vertex onto one target vertex breaks adjacency.
    auto bad = dir.file("bad.hom", "hom 3\n0 0\n1 0\n2 0\n");
    auto nv = run_cli({"verify", g, target, bad});
    CHECK(nv.code == cli::kNegative);
}

TEST_CASE("cli output is deterministic") {
    TempDir dir;
    auto g = dir.file("k4.g", kK4);
    for (auto args : std::vector<std::vector<std::string>>{
             {"map", g, "--seed", "3"}, {"star-color", g, "--seed", "5"}, {"orient", g}, {"bounds", "planar", "--k", "4"}}) {
        auto a = run_cli(args);
        auto b = run_cli(args);
        CHECK(a.code == cli::kOk);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("cli bounds") {
    auto planar = run_cli({"bounds", "planar", "--k", "2"});
    REQUIRE(planar.code == cli::kOk);
    auto p = json::parse(planar.out);
    CHECK(p["lower"] == "8");
    CHECK(p["upper"] == "67486500600000000");

    auto genus = json::parse(run_cli({"bounds", "genus", "--g", "3"}).out);
    CHECK(genus["lower"] == "2.5");
    CHECK(genus["upper"] == "6");

    auto t4 = json::parse(run_cli({"bounds", "theorem4", "--r", "1", "--d", "1", "--k", "2"}).out);
    CHECK(t4["upper"] == "128");
}

TEST_CASE("cli orientation feasibility and exit codes") {
    TempDir dir;
    auto g = dir.file("k4.g", kK4);
    auto ok = run_cli({"orient", g, "--d", "2"});
    CHECK(ok.code == cli::kOk);
    auto o = json::parse(ok.out);
    CHECK(o["max_in_degree"] == 2);
    auto orientation = dir.file("k4.o", o["orientation"].get<std::string>());

    auto infeasible = run_cli({"orient", g, "--d", "1"});
    CHECK(infeasible.code == cli::kNegative);
    CHECK(json::parse(infeasible.out)["violating_edges"] == 6);

    auto oc = run_cli({"out-color", g, "--orientation", orientation});
    CHECK(oc.code == cli::kOk);
    CHECK(json::parse(oc.out)["verified"] == true);

    CHECK(run_cli({}).code == cli::kUsage);
    CHECK(run_cli({"density"}).code == cli::kUsage);
    CHECK(run_cli({"density", dir.path("missing.g")}).code == cli::kUsage);
    auto loop = run_cli({"density", dir.file("loop.g", "2 1 2\n0 0 1\n")});
    CHECK(loop.code == cli::kUsage);
    CHECK(loop.err.find("line") != std::string::npos);
    CHECK(run_cli({"--format", "xml", "density", g}).code == cli::kUsage);
}

TEST_CASE("cli star coloring and guards") {
    TempDir dir;
    auto g = dir.file("k4.g", kK4);
    CHECK(run_cli({"star-color", g, "--exact", "4"}).code == cli::kOk);
    CHECK(run_cli({"star-color", g, "--exact", "3"}).code == cli::kNegative);

    std::string path = "21 20 2\n";
    for (int i = 0; i < 20; ++i) path += std::to_string(i) + " " + std::to_string(i + 1) + " 1\n";
    auto big = dir.file("p21.g", path);
    auto guarded = run_cli({"star-color", big, "--exact", "3"});
    CHECK(guarded.code == cli::kGuard);
    CHECK(guarded.err.find("ECTARGET_GUARD_OVERRIDE") != std::string::npos);

    CHECK(run_cli({"build-target", "--q", "40", "--d", "3", "--k", "5", "--explicit"}).code == cli::kGuard);
}

TEST_CASE("cli universal search") {
    TempDir dir;
    auto k2 = dir.file("k2.g", "2 1 1\n0 1 1\n");
    auto min = run_cli({"min-target", k2, "--k", "2", "--max-p", "3"});
    REQUIRE(min.code == cli::kOk);
    auto m = json::parse(min.out);
    CHECK(m["size"] == 3);

    auto target = dir.file("k2.target", m["target"].get<std::string>());
    CHECK(run_cli({"check-universal", target, "--graph", k2, "--k", "2"}).code == cli::kOk);

    auto single = dir.file("single.ecg", "2 1 2\n0 1 1\n");
    auto counter = run_cli({"check-universal", single, "--graph", k2, "--k", "2"});
    CHECK(counter.code == cli::kNegative);
    CHECK(json::parse(counter.out)["universal"] == false);

    auto compact = dir.file("compact.target", "target 2 1 2\n");
    auto built = run_cli({"build-target", "--q", "2", "--d", "1", "--k", "2"});
    CHECK(json::parse(built.out)["vertices"] == "6");
    CHECK(run_cli({"check-universal", compact, "--graph", k2, "--k", "2"}).code == cli::kOk);
}
