#include "tricluster/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct Common {
    std::string type, orient, quiver_file, format = "text", cache_dir;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--type", c.type, "Dynkin type, e.g. A3, D4, E6");
    sub->add_option("--orient", c.orient, "arrows such as \"1->2 3->2\"; default orients edges upwards");
    sub->add_option("--quiver-file", c.quiver_file, "quiver in line or JSON format");
    sub->add_option("--format", c.format, "text, json, dot or tsv")->check(CLI::IsMember({"text", "json", "dot", "tsv"}));
    sub->add_option("--cache-dir", c.cache_dir, std::string("result cache (also $") + tc::kCacheEnv + ")");
}

std::string spec_text(const std::string& s) {
    if (s.empty() || s[0] != '@') return s;
    std::ifstream in(s.substr(1));
    if (!in) throw tc::ParseError("cannot read '" + s.substr(1) + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}

int main(int argc, char** argv) {
    CLI::App app{"Morphism categories, ice quivers, boundary Homs and braid normal forms for Dynkin quivers"};
    app.require_subcommand(1);
    Common c;
    tc::Json opt = tc::Json::object();

    auto* quiver = app.add_subcommand("quiver", "normalized quiver with Coxeter data");
    auto* ar = app.add_subcommand("ar", "AR quiver of mod kQ");
    auto* mpr = app.add_subcommand("mpr", "AR quiver of mpr(kQ), F-powers and cones");
    auto* ice = app.add_subcommand("ice", "ice quiver with potential");
    auto* hom = app.add_subcommand("hom", "graded Homs of the boundary dg category");
    auto* higgs = app.add_subcommand("higgs", "Higgs category over the preprojective algebra");
    auto* braid = app.add_subcommand("braid", "braid normal forms and the star involution");
    for (auto* s : {quiver, ar, mpr, ice, hom, higgs, braid}) add_common(s, c);

    std::string f_label, cone_label;
    int power = 1;
    mpr->add_option("--f", f_label, "label whose F-power to compute");
    mpr->add_option("--power", power, "exponent of F")->needs(mpr->get_option("--f"));
    mpr->add_option("--cone", cone_label, "label whose cone to compute");

    std::vector<std::string> pair;
    int floor = tc::kDefaultFloor, pmax = -1;
    bool table = false, arrows = false;
    hom->add_option("--pair", pair, "two labels or mpr vertex numbers")->expected(2);
    hom->add_flag("--table", table, "full table over mpr labels");
    hom->add_flag("--arrows", arrows, "arrows of the degree-0 quiver");
    hom->add_option("--floor", floor, "lowest degree computed");
    hom->add_option("--pmax", pmax, "last tau^-p term summed; default adapts to the floor");

    std::string phi, lift, orbit;
    bool tq = false, untwisted = false, basis = false;
    higgs->add_option("--phi", phi, "labels joined by '+'");
    higgs->add_option("--lift", lift, "u-spec JSON, or @file");
    higgs->add_option("--omega-orbit", orbit, "frozen label");
    higgs->add_flag("--tq", tq, "algebra T_Q");
    higgs->add_flag("--untwisted", untwisted, "T_Q without the Nakayama twist");
    higgs->add_flag("--basis", basis, "basis of the preprojective algebra");

    std::string word;
    bool star = false, member = false, k0 = false, triangular = false;
    braid->add_option("--word", word, "e.g. \"1 2 -1\"; negative letters are inverses")->required();
    braid->add_flag("--star", star, "image under the star involution");
    braid->add_flag("--member", member, "membership in B*");
    braid->add_flag("--k0", k0, "action on K_0");
    braid->add_flag("--triangular", triangular, "silting extension label");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    tc::JobSpec job;
    job.command = app.get_subcommands().front()->get_name();
    job.type = c.type;
    job.orient = c.orient;
    job.quiver_file = c.quiver_file;
    job.format = c.format;
    job.cache_dir = c.cache_dir;
    try {
        if (!f_label.empty()) {
            opt["f"] = f_label;
            opt["power"] = power;
        }
        if (!cone_label.empty()) opt["cone"] = cone_label;
        if (!pair.empty()) opt["pair"] = pair;
        if (table) opt["table"] = true;
        if (arrows) opt["arrows"] = true;
        if (job.command == "hom") opt["floor"] = floor;
        if (pmax >= 0) opt["pmax"] = pmax;
        if (!phi.empty()) opt["phi"] = phi;
        if (!lift.empty()) opt["lift"] = tc::Json::parse(spec_text(lift));
        if (!orbit.empty()) opt["omega_orbit"] = orbit;
        if (tq) opt["tq"] = true;
        if (untwisted) opt["untwisted"] = true;
        if (basis) opt["basis"] = true;
        if (!word.empty()) opt["word"] = word;
        if (star) opt["star"] = true;
        if (member) opt["member"] = true;
        if (k0) opt["k0"] = true;
        if (triangular) opt["triangular"] = true;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    job.options = opt;
    return tc::run(job, std::cout, std::cerr);
}
