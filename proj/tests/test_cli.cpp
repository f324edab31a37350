#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pochhammer/cli.hpp"
#include "pochhammer/homology.hpp"
#include "pochhammer/pants.hpp"
#include "pochhammer/pants_io.hpp"

using namespace pochhammer;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result pochh(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string data = POCHH_DATA_DIR;

}  // namespace

TEST_CASE("betti") {
    const Result r = pochh({"betti", "-g", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "closed surface of genus 2\nb = (0, 2, 0)\nchi: -2 = -2 OK\n");

    const Presentation p = surface_presentation(3, 1);
    const BettiVector b = twisted_betti(p, AlphaHom::hurewicz(p));
    const Result j = pochh({"betti", "-g", "3", "--punctures", "1", "--json", "--exact"});
    CHECK(j.code == 0);
    const auto doc = parse_json(j.out);
    CHECK(doc["betti"].get<std::vector<std::int64_t>>() == b.dims);
    CHECK(doc["euler_characteristic"] == -5);
    CHECK(doc["euler_check"] == true);

    // Byte-stable across runs and rank backends.
    CHECK(pochh({"betti", "-g", "3", "--punctures", "1", "--json"}).out == j.out);
    CHECK(pochh({"betti", "-g", "3", "--punctures", "1", "--json", "--cross-check"}).out == j.out);

    const Result alpha = pochh({"betti", "--alpha", data + "/genus2_alpha.json", "--json"});
    CHECK(alpha.code == 0);
    const SurfaceSpec spec = parse_surface_spec(read_file(data + "/genus2_alpha.json"));
    const Presentation p2 = surface_presentation(spec.genus, spec.punctures);
    CHECK(parse_json(alpha.out)["betti"].get<std::vector<std::int64_t>>() ==
          twisted_betti(p2, AlphaHom(p2, *spec.alpha)).dims);

    CHECK(pochh({"betti", "--space", "circle"}).out.find("b = (0, 0)") != std::string::npos);
    CHECK(pochh({"betti", "--space", "wedge", "--json"}).out.find("\"betti\":[0,1]") != std::string::npos);
}

TEST_CASE("seeds") {
    const std::vector<std::string> args{"betti", "-g", "2", "--json", "--trials", "3"};
    const std::string base = pochh(args).out;
    setenv("POCHH_SEED", "12345", 1);
    CHECK(pochh(args).out == base);
    auto seeded = args;
    seeded.insert(seeded.end(), {"--seed", "7"});
    CHECK(pochh(seeded).code == 0);
    setenv("POCHH_SEED", "not-a-number", 1);
    CHECK(pochh(args).code == 2);
    CHECK(pochh(seeded).code == 0);
    unsetenv("POCHH_SEED");
}

TEST_CASE("loop") {
    const Result r = pochh({"loop", "-g", "2", "--word", "[a1,b1]"});
    CHECK(r.code == 0);
    CHECK(r.out.find("class: nonzero") != std::string::npos);
    const Result bounding = pochh({"loop", "-g", "2", "--word", "[a1,b1][a2,b2]", "--json"});
    CHECK(bounding.code == 0);
    CHECK(parse_json(bounding.out)["nonzero"] == false);
    CHECK(pochh({"loop", "-g", "2", "--word", "a1"}).code == 2);
    CHECK(pochh({"loop", "-g", "2", "--word", "a7"}).code == 2);
}

TEST_CASE("vortex and symk") {
    CHECK(pochh({"vortex", "-g", "2", "-r", "3", "--json"}).out == "{\"betti\":[0,2,0,2,0,2,0]}\n");
    CHECK(pochh({"symk", "-g", "3", "-k", "2", "--json"}).out == "{\"betti\":[0,0,6,0,0]}\n");
    const Result bad = pochh({"vortex", "-g", "1", "-r", "2"});
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("pants-check") {
    const Result d = pochh({"pants-check", data + "/dumbbell.json"});
    CHECK(d.code == 0);
    CHECK(d.out == "valid\nseparating: S\nunfashionable: curve S separating\n");

    const Result t = pochh({"pants-check", data + "/theta.json", "--json"});
    CHECK(t.out == "{\"fashionable\":true,\"null_homologous\":[],\"separating\":[],\"valid\":true}\n");

    const auto dir = std::filesystem::temp_directory_path();
    const auto broken = (dir / "pochh_broken.json").string();
    {
        std::ofstream f(broken);
        f << "{\n  \"format\": \"pochhammer/1\",\n  \"surface\": {\"genus\": 2\n}\n";
    }
    const Result b = pochh({"pants-check", broken});
    CHECK(b.code == 2);
    CHECK(b.err.find("line") != std::string::npos);

    const auto invalid = (dir / "pochh_invalid.json").string();
    {
        PantsGraph g = parse_pants(read_file(data + "/theta.json"));
        g.curves[0].ends[1].label = g.curves[0].ends[0].label;
        std::ofstream f(invalid);
        f << write_pants(g);
    }
    const Result v = pochh({"pants-check", invalid});
    CHECK(v.code == 2);
    CHECK(v.out.find("[orientation] curve") != std::string::npos);
    CHECK(pochh({"pants-check", (dir / "pochh_missing.json").string()}).code == 2);
}

TEST_CASE("pants-fashion, pochhammer and sew") {
    const auto out = (std::filesystem::temp_directory_path() / "pochh_fashioned.json").string();
    const Result f = pochh({"pants-fashion", data + "/dumbbell.json", "-o", out});
    CHECK(f.code == 0);
    CHECK(f.out.find("1 flip") != std::string::npos);
    const PantsGraph g = parse_pants(read_file(out));
    CHECK(g == make_fashionable(parse_pants(read_file(data + "/dumbbell.json"))).graph);
    CHECK(is_fashionable(g));

    CHECK(pochh({"sew", out, "--json"}).out == "{\"fashionable\":true,\"rank\":2,\"subset\":[0,1]}\n");
    const Result d = pochh({"sew", data + "/dumbbell.json"});
    CHECK(d.code == 0);
    CHECK(d.err.find("not fashionable") != std::string::npos);
    CHECK(d.out == "sewing rank 1 of 2\n");
    CHECK(pochh({"sew", data + "/theta.json", "-J", "none", "--json"}).out ==
          "{\"fashionable\":true,\"rank\":0,\"subset\":[]}\n");
    CHECK(pochh({"sew", data + "/theta.json", "-J", "0,5"}).code == 2);

    const Result p = pochh({"pochhammer", data + "/theta.json"});
    CHECK(p.code == 0);
    CHECK(p.out.find("P1: a1 a2 a1^-1 a2^-1\n  (-z3 + 1, 0, z1 - 1, 0)\n  nonzero\n") == 0);
    CHECK(pochh({"pochhammer", data + "/dumbbell.json"}).code == 2);
}

TEST_CASE("dot") {
    const Result r = pochh({"dot", data + "/dumbbell.json"});
    CHECK(r.code == 0);
    CHECK(r.out == export_dot(parse_pants(read_file(data + "/dumbbell.json"))));
    CHECK(r.out.find("separating=true") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(pochh({}).code == 2);
    CHECK(pochh({"frobnicate"}).code == 2);
    CHECK(pochh({"betti", "-g", "two"}).code == 2);
    CHECK(pochh({"betti", "-g", "0"}).code == 2);
    CHECK(pochh({"betti", "-g", "2", "--trials", "0"}).code == 2);
    CHECK(pochh({"--help"}).code == 0);
}
