#include "doctest.h"

#include "app.hpp"
#include "fixtures.hpp"
#include "json_io.hpp"
#include "svg.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tiltwall;
using nlohmann::json;

namespace {

struct Run {
    int rc;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int rc = app::run(args, out, err);
    return {rc, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

std::filesystem::path scratch_file(const std::string& name, const std::string& body) {
    auto p = std::filesystem::temp_directory_path() / ("tiltwall_test_" + name);
    std::ofstream(p) << body;
    return p;
}

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("bounds E") {
    auto r = cli({"bounds", "E", "--d", "7", "--k", "2"});
    CHECK(r.rc == 0);
    CHECK(r.out == "19\n");
    CHECK(cli({"bounds", "E", "--d", "7/2", "--k", "1"}).out == "47/6\n");
}

TEST_CASE("refute with expectation") {
    CHECK(cli({"refute", "(1,0,-7,115/6)", "--profile", "P3", "--vanishing", "2", "--expect", "refuted"}).rc == 0);
    auto miss = cli({"refute", "(1,0,-7,19)", "--profile", "P3", "--vanishing", "2", "--expect", "refuted"});
    CHECK(miss.rc == 2);
    CHECK(miss.out.find("verdict WallsRemain") != std::string::npos);
    CHECK(cli({"refute", "(1,0,-7,19)", "--vanishing", "2", "--expect", "walls-remain"}).rc == 0);
}

TEST_CASE("table gp") {
    auto r = cli({"table", "gp", "--k", "1", "--dmax", "5"});
    REQUIRE(r.rc == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 6);
    std::vector<std::string> genus;
    for (std::size_t i = 1; i < ls.size(); ++i) {
        std::istringstream row(ls[i]);
        std::string d, e, g;
        row >> d >> e >> g;
        genus.push_back(g);
    }
    CHECK(genus == std::vector<std::string>{"0", "0", "1", "3", "6"});

    auto k5 = cli({"table", "gp", "--k", "5", "--dmax", "21", "--json"});
    json j = json::parse(k5.out);
    CHECK(j["rows"][16]["source"] == "conjecture");
    CHECK(j["rows"][16]["genus"] == "35");
    CHECK(j["rows"][20]["source"] == "theorem");
    CHECK(j["rows"][2]["genus"].is_null());
}

TEST_CASE("usage and lattice errors exit 1") {
    CHECK(cli({}).rc == 1);
    CHECK(cli({"bogus"}).rc == 1);
    CHECK(cli({"bounds", "E", "--d", "7"}).rc == 1);
    CHECK(cli({"class", "delta", "(1,0,x)"}).rc == 1);
    auto lat = cli({"enumerate", "(1,0,-7,1/7)"});
    CHECK(lat.rc == 1);
    CHECK(lat.err.find("(1/6)Z") != std::string::npos);
    CHECK(cli({"enumerate", "(1,0,-7/2,0)", "--profile", "P3"}).rc == 0);
    CHECK(cli({"refute", "(1,0,-7,19)", "--profile", "K3"}).rc == 1);
    CHECK(cli({"rangeb", "--k", "5", "--f", "5", "--d", "17"}).rc == 1);
    CHECK(cli({"special2k11", "--k", "30"}).rc == 1);
    CHECK(cli({"--help"}).rc == 0);
}

TEST_CASE("class algebra and JSON round trip") {
    auto tw = cli({"class", "twist", "(1,0,-7,19)", "--beta", "1", "--json"});
    REQUIRE(tw.rc == 0);
    json j = json::parse(tw.out);
    CHECK(io::chern_from_json(j) == twist(ChernVec{Rat(1), Rat(0), Rat(-7), Rat(19)}, Rat(1)));
    // Emitted JSON goes straight back in.
    CHECK(cli({"class", "delta", tw.out}).out == "14\n");
    auto back = cli({"class", "twist", tw.out, "--beta", "-1"});
    CHECK(back.out == "(1,0,-7,19)\n");
    CHECK(cli({"class", "tensor", "(1,0,0,0)", "--n", "-2"}).out == "(1,-2,2,-4/3)\n");
    CHECK(cli({"class", "dual", "(-1,0,5,7)"}).out == "(1,0,-5,7)\n");

    auto cert = cli({"refute", "(1,0,-7,115/6)", "--vanishing", "2", "--json"});
    auto path = scratch_file("cert.json", cert.out);
    auto again = cli({"refute", "@" + path.string(), "--vanishing", "2", "--json"});
    CHECK(again.out == cert.out);

    auto prof = cli({"profile", "PPAV"});
    auto ppath = scratch_file("ppav.json", prof.out);
    auto via_file = cli({"enumerate", "(1,0,-7/2,0)", "--profile", ppath.string(), "--json"});
    auto via_name = cli({"enumerate", "(1,0,-7/2,0)", "--profile", "PPAV", "--json"});
    CHECK(via_file.rc == 0);
    CHECK(via_file.out == via_name.out);
}

TEST_CASE("wall and qdisk") {
    CHECK(cli({"wall", "(1,0,-7)", "(1,-2,2)"}).out == "semicircle center=-9/2 radius_sq=25/4 beta=[-7, -2]\n");
    CHECK(cli({"wall", "(1,0,0)", "(2,0,0)"}).out == "degenerate\n");
    json q = json::parse(cli({"qdisk", "(1,0,-7,19)", "--json"}).out);
    CHECK(q["center"] == "-57/14");
    CHECK(q["radius_sq"] == "505/196");
}

TEST_CASE("enumerate JSON carries the audit trail") {
    json j = json::parse(cli({"enumerate", "(1,0,-7,19)", "--vanishing", "2", "--json"}).out);
    REQUIRE(j["candidates"].size() == 2);
    CHECK(j["candidates"][0]["wall"]["center"] == "-9/2");
    CHECK(j["candidates"][0]["prefixes"][0]["sub"]["c"] == "-2");
    CHECK(!j["audit"].empty());
}

TEST_CASE("threads do not change output") {
    std::vector<std::string> args{"enumerate", "(2,-1,-9/2,7/6)", "--json"};
    setenv("TILTWALL_THREADS", "1", 1);
    auto one = cli(args);
    setenv("TILTWALL_THREADS", "6", 1);
    auto six = cli(args);
    unsetenv("TILTWALL_THREADS");
    CHECK(one.rc == 0);
    CHECK(one.out == six.out);
}

TEST_CASE("certify") {
    auto r = cli({"certify"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);

    auto bad = scratch_file("bad_fixtures.json", R"({"version":1,"fixtures":[
        {"id":"wrong","coefficients":["-2","0","1"],"interval":{"lo":"0","hi":"1"},"claimed":"StrictlyPositive"}]})");
    auto f = cli({"certify", "--fixtures", bad.string()});
    CHECK(f.rc == 2);
    CHECK(f.out.find("FAIL wrong") != std::string::npos);

    auto old = scratch_file("old_fixtures.json", R"({"version":0,"fixtures":[]})");
    CHECK(cli({"certify", "--fixtures", old.string()}).rc == 1);
}

TEST_CASE("fixture file contents") {
    auto fx = io::load_fixtures(TILTWALL_FIXTURES);
    CHECK(fx.size() >= 25);
    bool quartic = false, three_quarter = false;
    for (const auto& f : fx) {
        if (f.p == Poly({Rat(-1), Rat(-8), Rat(20), Rat(-24), Rat(12)}) && f.interval.lo == Rat(2) && !f.interval.hi)
            quartic = f.claimed == SignClass::StrictlyPositive;
        if (f.id == "phi_three_quarter_value") three_quarter = f.claimed == SignClass::IdenticallyZero && f.p.is_zero();
    }
    CHECK(quartic);
    CHECK(three_quarter);
}

TEST_CASE("rangeb and special2k11 JSON") {
    json r = json::parse(cli({"rangeb", "--k", "5", "--f", "4", "--d", "17", "--json"}).out);
    CHECK(r["all_ok"] == true);
    CHECK(r["conjecture_bound"] == "68");
    CHECK(r["anchor"]["center"] == "-49/8");
    json s = json::parse(cli({"special2k11", "--k", "31", "--json"}).out);
    CHECK(s["d"] == "763");
    CHECK(s["E"] == "20984");
    CHECK(s["passes"] == true);
    CHECK(s["rows"].size() == 7);
}

TEST_CASE("plot") {
    std::string spec = R"J({"v":"(1,0,-7,19)","beta_range":["-8","0"],"alpha_max":"3",
        "layers":{"walls":true,"q_region":true},"width_px":400,"height_px":200,"vanishing":2})J";
    auto sp = scratch_file("spec.json", spec);
    auto out1 = std::filesystem::temp_directory_path() / "tiltwall_test_1.svg";
    auto out2 = std::filesystem::temp_directory_path() / "tiltwall_test_2.svg";
    REQUIRE(cli({"plot", sp.string(), "-o", out1.string()}).rc == 0);
    REQUIRE(cli({"plot", sp.string(), "-o", out2.string()}).rc == 0);
    std::stringstream a, b;
    a << std::ifstream(out1).rdbuf();
    b << std::ifstream(out2).rdbuf();
    CHECK(a.str() == b.str());
    CHECK(a.str() == cli({"plot", sp.string()}).out);

    // Exactly the enumerated arcs plus the Q disk.
    const std::string svg = a.str();
    CHECK(count(svg, "class=\"wall\"") == 2);
    CHECK(svg.find("data-center=\"-9/2\" data-radius-sq=\"25/4\"") != std::string::npos);
    CHECK(svg.find("data-center=\"-17/4\" data-radius-sq=\"65/16\"") != std::string::npos);
    CHECK(count(svg, "class=\"q-region\"") == 1);
    // O(-2) wall runs from beta = -7 to -2: pixels 50 and 300.
    CHECK(svg.find("M 50.000000 200.000000 A 125.000000 166.666667 0 0 1 300.000000 200.000000") != std::string::npos);

    io::PlotSpec empty = io::plot_spec_from_json(json::parse(spec));
    empty.layers = {false, false, false, false};
    std::string blank = io::emit_svg(empty, SearchResult{});
    CHECK(blank.find("<svg") != std::string::npos);
    CHECK(blank.find("<path") == std::string::npos);
    CHECK(blank.find("</svg>") != std::string::npos);

    // PlotSpec JSON round trip.
    io::PlotSpec s = io::plot_spec_from_json(json::parse(spec));
    CHECK(io::to_json(io::plot_spec_from_json(io::to_json(s))) == io::to_json(s));

    auto bad = scratch_file("bad_spec.json", R"J({"v":"(1,0,-7,19)","beta_range":["0","-1"],"alpha_max":"3"})J");
    CHECK(cli({"plot", bad.string()}).rc == 1);
}
