#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "djm/cli.hpp"

using namespace djm;

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(DJM_FIXTURE_DIR) + "/" + name; }

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("djm_cli_" + std::to_string(::getpid())))
    {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

double field_after(const std::string& text, const std::string& key)
{
    auto pos = text.find(key + " ");
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + key.size() + 1));
}

}  // namespace

TEST_CASE("gen then oracle on convex K6")
{
    TempDir tmp;
    Run g = run({"gen", "--kind", "convex", "--n", "6", "-o", tmp / "k6.json"});
    CHECK(g.code == kExitOk);
    Run o = run({"oracle", tmp / "k6.json"});
    CHECK(o.code == kExitOk);
    CHECK(o.out.rfind("optimum 3\n", 0) == 0);
    CHECK(o.out.find("exact true") != std::string::npos);
}

TEST_CASE("solve on K3 prints 1")
{
    Run s = run({"solve", fixture("k3.json")});
    CHECK(s.code == kExitOk);
    CHECK(s.out.rfind("size 1\n", 0) == 0);
}

TEST_CASE("compare on convex K8 reports a ratio in range")
{
    TempDir tmp;
    run({"gen", "--kind", "convex", "--n", "8", "-o", tmp / "k8.json"});
    Run c = run({"compare", tmp / "k8.json"});
    CHECK(c.code == kExitOk);
    double ratio = field_after(c.out, "ratio");
    CHECK(ratio <= 1.0);
    CHECK(ratio >= 0.25);
    CHECK(field_after(c.out, "oracle") == 4);
}

TEST_CASE("validate exit codes and fixtures")
{
    CHECK(run({"validate", fixture("k3.json")}).code == kExitOk);
    Run dc = run({"validate", fixture("double_crossing.json")});
    CHECK(dc.code == kExitInvalid);
    CHECK(dc.out.find("multi-crossing") != std::string::npos);
    Run tv = run({"validate", fixture("edge_through_vertex.json")});
    CHECK(tv.code == kExitInvalid);
    CHECK(tv.out.find("edge-through-vertex") != std::string::npos);
    Run ov = run({"validate", fixture("overlap.json"), "--json"});
    CHECK(ov.code == kExitInvalid);
    CHECK(ov.out.find("\"overlap\"") != std::string::npos);

    CHECK(run({"solve", fixture("overlap.json")}).code == kExitInvalid);
}

TEST_CASE("usage and I/O errors exit with 3")
{
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"gen", "--kind", "bogus", "--n", "4"}).code == kExitUsage);
    CHECK(run({"gen", "--kind", "convex"}).code == kExitUsage);
    CHECK(run({"gen", "--kind", "convex", "--n", "2"}).code == kExitUsage);
    Run missing = run({"solve", "/nonexistent/in.json"});
    CHECK(missing.code == kExitUsage);
    CHECK_FALSE(missing.err.empty());
    CHECK(run({"solve", fixture("k3.json"), "--root", "7"}).code == kExitUsage);
    CHECK(run({"help"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("cylinders through the command line")
{
    TempDir tmp;
    CHECK(run({"gen", "--kind", "cyl-selfhosted", "--delta", "5", "--seed", "3", "-o", tmp / "c.json"}).code == kExitOk);
    CHECK(run({"validate", tmp / "c.json"}).code == kExitOk);
    Run o = run({"oracle", tmp / "c.json"});
    CHECK(o.code == kExitOk);
    CHECK(field_after(o.out, "optimum") >= 1);
    CHECK(run({"svg", tmp / "c.json", "-o", tmp / "c.svg"}).code == kExitOk);
    CHECK(slurp(tmp / "c.svg").find("stroke-dasharray") != std::string::npos);
    CHECK(run({"solve", tmp / "c.json"}).code == kExitUsage);
}

TEST_CASE("svg with a highlighted matching and subgraph")
{
    TempDir tmp;
    run({"gen", "--kind", "random-points", "--n", "9", "--seed", "5", "-o", tmp / "d.json"});
    CHECK(run({"solve", tmp / "d.json", "--root", "all", "-o", tmp / "m.json"}).code == kExitOk);
    CHECK(run({"svg", tmp / "d.json", "-o", tmp / "d.svg", "--matching", tmp / "m.json", "--subgraph-root", "0"}).code ==
          kExitOk);
    std::string svg = slurp(tmp / "d.svg");
    CHECK(svg.find("#c0392b") != std::string::npos);
    CHECK(svg.find("#2c6fbb") != std::string::npos);
}

TEST_CASE("estimate-c report")
{
    Run e = run({"estimate-c", "--delta", "4", "--trials", "6", "--seed", "1"});
    CHECK(e.code == kExitOk);
    CHECK(field_after(e.out, "trials") == 6);
    CHECK(field_after(e.out, "min") >= 1);
    CHECK(e.out.find("exact true") != std::string::npos);

    EstimateReport r = estimate_c(4, 6, 1, EstimateKinds::Both, 1'000'000);
    CHECK(r.selfhosted_trials == 3);
    CHECK(r.random_trials == 3);
    CHECK(r.min <= r.mean);
    CHECK(r.mean <= r.max);
    CHECK(r.max <= 2);
}

TEST_CASE("identical invocations give identical bytes")
{
    TempDir tmp;
    for (const char* kind : {"random-points", "cyl-random"}) {
        std::vector<std::string> args{"gen", "--kind", kind, "--n", "7", "--seed", "12"};
        Run a = run(args);
        Run b = run(args);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
    run({"gen", "--kind", "random-points", "--n", "10", "--seed", "8", "-o", tmp / "d.json"});
    run({"solve", tmp / "d.json", "-o", tmp / "m1.json"});
    run({"solve", tmp / "d.json", "-o", tmp / "m2.json"});
    CHECK(slurp(tmp / "m1.json") == slurp(tmp / "m2.json"));
}
