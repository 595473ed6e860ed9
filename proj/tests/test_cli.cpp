#include "doctest.h"
#include "oracle.hpp"

#include "tricluster/cli.hpp"
#include "tricluster/ice.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tc;
namespace fs = std::filesystem;

namespace {

JobSpec job(const std::string& cmd, const std::string& type, Json opts = Json::object(), const std::string& format = "text") {
    JobSpec j;
    j.command = cmd;
    j.type = type;
    j.format = format;
    j.options = std::move(opts);
    return j;
}

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run_job(const JobSpec& j) {
    std::ostringstream out, err;
    int code = run(j, out, err);
    return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
    fs::path d = fs::temp_directory_path() / ("tricluster_test_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(d);
    return d;
}

}

TEST_CASE("quiver JSON round trip") {
    for (const char* s : {"A1", "A3", "D4", "E6"})
        for (const Quiver& q : oracle::all_orientations(parse_type(s))) {
            REQUIRE(quiver_from_json(Json::parse(quiver_to_json(q).dump())) == q);
            REQUIRE(parse_quiver(quiver_to_json(q).dump()) == q);
            REQUIRE(parse_quiver(quiver_to_text(q)) == q);
        }
    CHECK_THROWS_AS(parse_quiver("{\"family\": \"A\"}"), ParseError);
    CHECK_THROWS_AS(parse_quiver("{\"family\": \"A\", \"rank\": 2, \"arrows\": [[1, 3]]}"), ParseError);
}

TEST_CASE("AR and mpr JSON round trips") {
    for (const char* s : {"A1", "A3", "D4"}) {
        Quiver q = default_quiver(parse_type(s));
        ARQuiver ar = knit_ar_quiver(q);
        CHECK(ar_from_json(Json::parse(export_ar(ar, "json"))) == ar);
        const MprARQuiver& m = mpr_ar_quiver(q);
        CHECK(mpr_from_json(Json::parse(export_mpr(m, "json"))) == m);
        IceQuiver iq = build_ice_quiver(q);
        CHECK(parse_ice_json(export_ice(iq, "json")) == iq);
    }
    std::string dot = export_ar(knit_ar_quiver(default_quiver(parse_type("A3"))), "dot");
    CHECK(dot.find("style=dashed") != std::string::npos);
    CHECK_THROWS_AS(export_mpr(mpr_ar_quiver(default_quiver(parse_type("A2"))), "tsv"), ParseError);
}

TEST_CASE("graded cells and hom tables round trip") {
    GradedDim g;
    g.floor = -2;
    g.add(-2, 1);
    g.add(0, 3);
    CHECK(graded_cell(g) == "-2:1,0:3");
    CHECK(parse_graded_cell("-2:1,0:3", -2) == g);
    CHECK(graded_from_json(graded_to_json(g)) == g);
    GradedDim exact;
    exact.add(1, 2);
    CHECK(graded_from_json(graded_to_json(exact)) == exact);
    CHECK_THROWS_AS(parse_graded_cell("1:x", 0), ParseError);
    CHECK_THROWS_AS(parse_graded_cell("1", 0), ParseError);
    for (const char* s : {"A1", "A2"}) {
        GammaHomTable t = hom_table(default_quiver(parse_type(s)));
        CHECK(hom_table_from_json(Json::parse(export_hom_table(t, "json"))) == t);
        CHECK(parse_hom_table_tsv(export_hom_table(t, "tsv")) == t);
    }
}

TEST_CASE("Higgs objects and braid forms round trip") {
    Quiver q = default_quiver(parse_type("A3"));
    for (const MprLabel& l : mpr_indecomposables(q)) {
        HiggsObject h = phi_image(q, l);
        CHECK(higgs_from_json(q, Json::parse(higgs_to_json(q, h).dump())) == h);
    }
    const Preproj& l = Preproj::get(q);
    Json dense = Json::array();
    for (int k = 0; k < l.dim(); ++k) dense.push_back(k == 0 ? 1 : 0);
    HiggsObject h = higgs_from_json(q, {{"p1", {1}}, {"p0", {1}}, {"matrix", {{dense}}}});
    CHECK(h.u[0][0] == l.vertex(0));
    CHECK_THROWS_AS(higgs_from_json(q, {{"p1", {1}}, {"p0", {1}}, {"matrix", {{{{"a9", 1}}}}}}), ParseError);
    CHECK_THROWS_AS(higgs_from_json(q, {{"p1", {1}}, {"p0", {}}, {"matrix", {{0}}}}), ParseError);
    std::mt19937_64 rng(2);
    for (const char* s : {"A2", "D4"}) {
        DynkinType t = parse_type(s);
        for (int k = 0; k < 20; ++k) {
            BraidWord w;
            for (int i = 0; i < 6; ++i) w.push_back({int(rng() % t.rank) + 1, rng() % 2 ? 1 : -1});
            CHECK(braid_word_from_json(braid_word_to_json(w)) == w);
            GarsideForm f = garside_normal_form(t, w);
            CHECK(garside_from_json(t, garside_to_json(t, f)) == f);
        }
    }
}

TEST_CASE("sha256") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache_key canonicalization") {
    JobSpec a = job("ice", "A3");
    a.orient = "1->2 2->3";
    JobSpec b = a;
    b.orient = "2->3 1->2";
    JobSpec c = a;
    c.orient = "2->1 2->3";
    CHECK(cache_key(a) == cache_key(a));
    CHECK(cache_key(a) == cache_key(b));
    CHECK(cache_key(a) != cache_key(c));
    JobSpec d = a;
    d.format = "dot";
    CHECK(cache_key(a) != cache_key(d));
    CHECK(cache_key(job("braid", "A2", {{"word", "1  2 -1"}})) == cache_key(job("braid", "A2", {{"word", "1 2 -1"}})));
    CHECK(cache_key(job("hom", "A2", {{"table", true}})) == cache_key(job("hom", "A2", {{"table", true}, {"floor", -2}})));
    CHECK(cache_key(job("hom", "A3", {{"pair", {"1", "Done(2)"}}})) ==
          cache_key(job("hom", "A3", {{"pair", {"Mod(1)", "10"}}})));
}

TEST_CASE("documented CLI examples through run") {
    JobSpec ice = job("ice", "A3", Json::object(), "dot");
    ice.orient = "1->2 2->3";
    Outcome o = run_job(ice);
    REQUIRE(o.code == 0);
    int nodes = 0;
    std::istringstream in(o.out);
    for (std::string line; std::getline(in, line);) nodes += line.find("[label=") != std::string::npos;
    CHECK(nodes == 12);

    Outcome t = run_job(job("hom", "A1", {{"table", true}}, "tsv"));
    REQUIRE(t.code == 0);
    GammaHomTable table = parse_hom_table_tsv(t.out);
    CHECK(table.labels.size() == 3);
    int total = 0;
    for (const auto& row : table.cells)
        for (const auto& c : row) total += c.at(0);
    CHECK(total == 6);

    Outcome b = run_job(job("braid", "A2", {{"word", "1 2 1"}, {"star", true}}, "json"));
    REQUIRE(b.code == 0);
    Json j = Json::parse(b.out);
    DynkinType a2 = parse_type("A2");
    CHECK(garside_from_json(a2, j.at("star").at("normal_form")) == garside_normal_form(a2, parse_braid_word("2 1 2", 2)));
}

TEST_CASE("exit codes") {
    CHECK(run_job(job("ice", "Q3")).code == 2);
    CHECK(run_job(job("hom", "A2")).code == 2);
    CHECK(run_job(job("braid", "A2", {{"word", "1 5"}})).code == 2);
    CHECK(run_job(job("ar", "A2", Json::object(), "tsv")).code == 2);
    CHECK(run_job(job("bogus", "A2")).code == 2);
    CHECK(run_job(job("braid", "E7", {{"word", "1"}})).code == 3);
    CHECK(run_job(job("braid", "A2", {{"word", "1"}, {"triangular", true}})).code == 3);
    CHECK(run_job(job("higgs", "D4", {{"lift", {{"p1", {1}}, {"p0", Json::array()}, {"matrix", Json::array()}}}})).code == 3);
    CHECK(run_job(job("mpr", "A9")).code == 3);
    Outcome o = run_job(job("mpr", "A3", {{"f", "Mod(9)"}, {"power", 1}}));
    CHECK(o.code == 2);
    CHECK(o.err.find("error:") == 0);
}

TEST_CASE("determinism and the result cache") {
    std::vector<JobSpec> jobs{job("quiver", "D5", Json::object(), "json"),
                              job("ar", "A4", Json::object(), "dot"),
                              job("mpr", "A3", Json::object(), "json"),
                              job("mpr", "A3", {{"f", "8"}, {"power", 2}}),
                              job("ice", "D4", Json::object(), "json"),
                              job("hom", "A2", {{"table", true}}, "json"),
                              job("higgs", "A2", {{"omega_orbit", "Done(1)"}}),
                              job("higgs", "A2", {{"tq", true}}, "json"),
                              job("braid", "D4", {{"word", "1 -2 3 4"}, {"k0", true}, {"member", true}}, "json")};
    fs::path dir = fresh_dir("cache");
    for (JobSpec j : jobs) {
        Outcome plain = run_job(j);
        REQUIRE(plain.code == 0);
        CHECK(run_job(j).out == plain.out);
        j.cache_dir = dir.string();
        Outcome miss = run_job(j);
        CHECK(miss.out == plain.out);
        fs::path file = dir / (cache_key(j) + ".json");
        REQUIRE(fs::exists(file));
        Outcome hit = run_job(j);
        CHECK(hit.out == plain.out);
    }
    int files = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        ++files;
        CHECK(e.path().extension() == ".json");
        Json entry = Json::parse(std::ifstream(e.path()));
        CHECK(entry.at("version") == kCacheVersion);
    }
    CHECK(files == int(jobs.size()));
    fs::remove_all(dir);
}

TEST_CASE("a stale cache entry is recomputed") {
    fs::path dir = fresh_dir("stale");
    JobSpec j = job("quiver", "A2");
    j.cache_dir = dir.string();
    std::string good = run_job(j).out;
    fs::path file = dir / (cache_key(j) + ".json");
    Json entry = Json::parse(std::ifstream(file));
    entry["version"] = kCacheVersion + 1;
    entry["artifact"] = "stale\n";
    std::ofstream(file) << entry.dump();
    CHECK(run_job(j).out == good);
    std::ofstream(file) << "not json";
    CHECK(run_job(j).out == good);
    fs::remove_all(dir);
}
