#include "tricluster/cli.hpp"

#include "tricluster/ice.hpp"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace tc {

namespace fs = std::filesystem;

namespace {

const std::set<std::string> kCommands{"quiver", "ar", "mpr", "ice", "hom", "higgs", "braid"};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void require_format(const JobSpec& job, std::initializer_list<const char*> ok) {
    for (const char* f : ok)
        if (job.format == f) return;
    std::string list;
    for (const char* f : ok) list += std::string(list.empty() ? "" : ", ") + f;
    throw ParseError("format '" + job.format + "' is not supported here (use " + list + ")");
}

bool flag(const Json& o, const char* key) { return o.contains(key) && o.at(key).get<bool>(); }

// "Mod(3)", "Done(1)" or an mpr vertex number
MprLabel resolve_label(const Quiver& q, const std::string& s) {
    const MprARQuiver& ar = mpr_ar_quiver(q);
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
        int v = std::stoi(s);
        if (v < 1 || v > int(ar.vertices.size())) throw ParseError("mpr vertex " + s + " does not exist");
        return ar.vertices[v - 1];
    }
    MprLabel l = parse_mpr_label(s);
    for (const auto& x : ar.vertices)
        if (x == l) return l;
    throw ParseError(l.str() + " is not an indecomposable of mpr for " + q.type.name());
}

std::vector<MprLabel> resolve_labels(const Quiver& q, const std::string& s) {
    std::vector<MprLabel> out;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, '+')) {
        auto a = part.find_first_not_of(' '), b = part.find_last_not_of(' ');
        if (a == std::string::npos) throw ParseError("empty label in '" + s + "'");
        out.push_back(resolve_label(q, part.substr(a, b - a + 1)));
    }
    if (out.empty()) throw ParseError("no labels given");
    return out;
}

std::string join_labels(const std::vector<MprLabel>& ls) {
    std::string s;
    for (const auto& l : ls) s += (s.empty() ? "" : "+") + l.str();
    return s.empty() ? "0" : s;
}

Json label_list(const std::vector<MprLabel>& ls) {
    Json a = Json::array();
    for (const auto& l : ls) a.push_back(l.str());
    return a;
}

std::string lambda_text(const Preproj& l, const Preproj::Vec& x) {
    std::string s;
    for (int k = 0; k < l.dim(); ++k) {
        if (!x[k]) continue;
        long long c = to_signed(x[k]);
        s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (std::llabs(c) != 1) s += std::to_string(std::llabs(c)) + " ";
        s += l.word_name(k);
    }
    return s.empty() ? "0" : s;
}

std::string higgs_text(const Quiver& q, const HiggsObject& x) {
    const Preproj& l = Preproj::get(q);
    std::ostringstream out;
    out << "p1";
    for (int v : x.p1) out << ' ' << v;
    out << "\np0";
    for (int v : x.p0) out << ' ' << v;
    out << '\n';
    for (std::size_t r = 0; r < x.u.size(); ++r)
        for (std::size_t s = 0; s < x.u[r].size(); ++s)
            out << "u[" << r + 1 << "][" << s + 1 << "] = " << lambda_text(l, x.u[r][s]) << '\n';
    return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string run_quiver(const JobSpec& job, const Quiver& q) {
    require_format(job, {"text", "json"});
    VertexInvolution inv = nakayama_involution(q);
    std::vector<int> star(inv.begin() + 1, inv.end());
    if (job.format == "json") {
        Json j = quiver_to_json(q);
        j["coxeter_number"] = coxeter_number(q.type);
        j["positive_roots"] = positive_root_count(q.type);
        j["nakayama_involution"] = star;
        return dump(j);
    }
    std::ostringstream out;
    out << quiver_to_text(q) << "# coxeter number " << coxeter_number(q.type) << "\n# positive roots "
        << positive_root_count(q.type) << "\n# nakayama involution";
    for (int s : star) out << ' ' << s;
    out << '\n';
    return out.str();
}

std::string run_mpr(const JobSpec& job, const Quiver& q) {
    const Json& o = job.options;
    if (o.contains("f")) {
        require_format(job, {"text", "json"});
        MprLabel x = resolve_label(q, o.at("f").get<std::string>());
        int p = o.at("power").get<int>();
        LabelComplex c = f_power_label(q, x, p);
        if (job.format == "json")
            return dump({{"label", x.str()}, {"power", p}, {"deg_m1", c.deg_m1}, {"deg0", c.deg0},
                         {"shift", c.shift}, {"d0_tracked", c.d0_tracked}, {"text", c.str()}});
        return "F^" + std::to_string(p) + "(" + x.str() + ") = " + c.str() + "\n";
    }
    if (o.contains("cone")) {
        require_format(job, {"text", "json"});
        MprLabel x = resolve_label(q, o.at("cone").get<std::string>());
        auto st = cone(q, x);
        const ZQ& z = ZQ::get(q);
        if (job.format == "json") {
            Json a = Json::array();
            for (const auto& s : st) a.push_back({{"label", s.label}, {"shift", s.shift}, {"dim_vector", z.dim_vector(s.label)}});
            return dump({{"label", x.str()}, {"cone", a}});
        }
        std::ostringstream out;
        out << "cone(" << x.str() << ") =";
        if (st.empty()) out << " 0";
        for (std::size_t k = 0; k < st.size(); ++k) {
            out << (k ? " + " : " ") << "M" << st[k].label;
            if (st[k].shift) out << "[" << st[k].shift << "]";
        }
        out << '\n';
        return out.str();
    }
    return export_mpr(mpr_ar_quiver(q), job.format);
}

std::string run_ice(const JobSpec& job, const Quiver& q) {
    IceQuiver iq = build_ice_quiver(q);
    if (job.format != "text") return export_ice(iq, job.format);
    std::ostringstream out;
    for (const auto& v : iq.vertices)
        out << "vertex " << v.id << ' ' << v.label.str() << (v.frozen ? " frozen" : "") << '\n';
    for (std::size_t k = 0; k < iq.arrows.size(); ++k) {
        const auto& a = iq.arrows[k];
        out << "arrow " << k + 1 << ": " << a.src << " -> " << a.dst << ' ' << origin_name(a.origin)
            << (a.frozen ? " frozen" : "") << '\n';
    }
    for (const auto& t : iq.potential) {
        out << "potential " << t.rho << " *";
        for (std::size_t k = 0; k < t.pairs.size(); ++k)
            out << (k ? " +" : "") << " (" << t.pairs[k].first << ' ' << t.pairs[k].second << ")";
        out << '\n';
    }
    return out.str();
}

std::string run_hom(const JobSpec& job, const Quiver& q) {
    const Json& o = job.options;
    int floor = o.at("floor").get<int>();
    if (o.contains("pair")) {
        require_format(job, {"text", "json"});
        auto pr = o.at("pair").get<std::vector<std::string>>();
        MprLabel x = resolve_label(q, pr.at(0)), y = resolve_label(q, pr.at(1));
        int pmax = o.contains("pmax") ? o.at("pmax").get<int>() : -1;
        GradedDim g = gamma_hom(q, x, y, floor, pmax);
        if (job.format == "json") return dump({{"source", x.str()}, {"target", y.str()}, {"hom", graded_to_json(g)}});
        return "Hom(" + x.str() + ", " + y.str() + ") = " + g.str() + "\n";
    }
    if (flag(o, "arrows")) {
        require_format(job, {"text", "json"});
        auto arrows = degree0_arrows(q);
        const MprARQuiver& ar = mpr_ar_quiver(q);
        if (job.format == "json") {
            Json a = Json::array();
            for (auto [st, m] : arrows) a.push_back({st.first, st.second, m});
            return dump({{"arrows", a}});
        }
        std::ostringstream out;
        for (auto [st, m] : arrows)
            out << st.first << " -> " << st.second << "  " << ar.vertices[st.first - 1].str() << " -> "
                << ar.vertices[st.second - 1].str() << (m > 1 ? "  x" + std::to_string(m) : "") << '\n';
        return out.str();
    }
    if (flag(o, "table")) {
        require_format(job, {"text", "json", "tsv"});
        return export_hom_table(hom_table(q, floor), job.format);
    }
    throw ParseError("hom needs one of --pair, --table, --arrows");
}

std::string run_higgs(const JobSpec& job, const Quiver& q) {
    require_format(job, {"text", "json"});
    const Json& o = job.options;
    const bool json = job.format == "json";
    if (o.contains("phi")) {
        auto ls = resolve_labels(q, o.at("phi").get<std::string>());
        HiggsObject h = phi_image(q, ls);
        if (json) return dump({{"labels", label_list(ls)}, {"image", higgs_to_json(q, h)}});
        return "phi(" + join_labels(ls) + ")\n" + higgs_text(q, h);
    }
    if (o.contains("lift")) {
        HiggsObject u = higgs_from_json(q, o.at("lift"));
        HiggsLift lift = lift_morphism(q, u);
        bool ok = higgs_isomorphic(q, lift.image, u);
        if (json)
            return dump({{"frozen", label_list(lift.frozen)}, {"t1", label_list(lift.t1)}, {"t0", label_list(lift.t0)},
                         {"discarded", lift.discarded}, {"image", higgs_to_json(q, lift.image)}, {"roundtrip", ok}});
        std::ostringstream out;
        out << "frozen " << join_labels(lift.frozen) << "\ncone " << join_labels(lift.t1) << " -> "
            << join_labels(lift.t0) << "\ndiscarded " << lift.discarded << "\nroundtrip " << (ok ? "yes" : "no")
            << "\nimage\n" << higgs_text(q, lift.image);
        return out.str();
    }
    if (o.contains("omega_orbit")) {
        MprLabel start = resolve_label(q, o.at("omega_orbit").get<std::string>());
        std::vector<MprLabel> orbit{start};
        for (MprLabel x = omega_action(q, start); !(x == start); x = omega_action(q, x)) orbit.push_back(x);
        int order = omega_order(q);
        if (json) return dump({{"orbit", label_list(orbit)}, {"length", orbit.size()}, {"order", order}});
        std::string s;
        for (const auto& l : orbit) s += l.str() + " -> ";
        return s + start.str() + "\nlength " + std::to_string(orbit.size()) + "\norder " + std::to_string(order) + "\n";
    }
    if (flag(o, "tq")) {
        TQAlgebra a = tq_algebra(q, !flag(o, "untwisted"));
        std::vector<int> perm;
        for (int p : a.nakayama_perm) perm.push_back(p + 1);
        if (json)
            return dump({{"lambda_dim", a.lambda_dim}, {"entry_dims", a.entry_dims}, {"total_dim", a.total_dim},
                         {"selfinjective", a.selfinjective}, {"nakayama_permutation", perm},
                         {"nakayama_order", a.nakayama_order}, {"automorphism_order", a.automorphism_order}});
        std::ostringstream out;
        out << "lambda dim " << a.lambda_dim << "\nentry dims";
        for (const auto& r : a.entry_dims) out << " [" << r[0] << ' ' << r[1] << ' ' << r[2] << ']';
        out << "\ntotal dim " << a.total_dim << "\nselfinjective " << (a.selfinjective ? "yes" : "no")
            << "\nnakayama permutation";
        for (int p : perm) out << ' ' << p;
        out << "\nnakayama order " << a.nakayama_order << "\nautomorphism order " << a.automorphism_order << '\n';
        return out.str();
    }
    if (flag(o, "basis")) {
        const Preproj& l = Preproj::get(q);
        LambdaInfo info = preprojective_algebra(q);
        if (json) {
            Json b = Json::array();
            for (int k = 0; k < l.dim(); ++k)
                b.push_back({{"index", k}, {"word", l.word_name(k)}, {"degree", l.basis(k).degree},
                             {"src", l.basis(k).src + 1}, {"dst", l.basis(k).dst + 1}});
            return dump({{"dim", info.dim}, {"top_degree", info.top_degree}, {"nakayama", info.nakayama}, {"basis", b}});
        }
        std::ostringstream out;
        out << "dim " << info.dim << "\ntop degree " << info.top_degree << "\nnakayama";
        for (int v : info.nakayama) out << ' ' << v;
        out << '\n';
        for (int k = 0; k < l.dim(); ++k)
            out << k << "  " << l.basis(k).src + 1 << " -> " << l.basis(k).dst + 1 << "  deg " << l.basis(k).degree
                << "  " << l.word_name(k) << '\n';
        return out.str();
    }
    throw ParseError("higgs needs one of --phi, --lift, --omega-orbit, --tq, --basis");
}

std::string run_braid(const JobSpec& job, const DynkinType& t) {
    require_format(job, {"text", "json"});
    const Json& o = job.options;
    if (!o.contains("word")) throw ParseError("braid needs --word");
    check_braid_rank(t);
    BraidWord w = parse_braid_word(o.at("word").get<std::string>(), t.rank);
    GarsideForm nf = garside_normal_form(t, w);
    Json j{{"type", t.name()}, {"word", braid_word_str(w)}, {"normal_form", garside_to_json(t, nf)},
           {"normal_form_text", garside_form_str(t, nf)}, {"normal_word", braid_word_str(garside_word(t, nf))}};
    std::ostringstream out;
    out << "word " << braid_word_str(w) << "\nnormal form " << garside_form_str(t, nf) << '\n';
    if (flag(o, "star")) {
        BraidWord s = star_involution(t, w);
        GarsideForm sf = garside_normal_form(t, s);
        j["star"] = {{"word", braid_word_str(s)}, {"normal_form", garside_to_json(t, sf)},
                     {"normal_form_text", garside_form_str(t, sf)}};
        out << "star " << braid_word_str(s) << "\nstar normal form " << garside_form_str(t, sf) << '\n';
    }
    if (flag(o, "member")) {
        bool m = is_in_B_star(t, w);
        j["in_B_star"] = m;
        out << "in B* " << (m ? "yes" : "no") << '\n';
    }
    if (flag(o, "k0")) {
        auto k = k0_action(t, w);
        j["k0"] = k;
        out << "k0\n";
        for (const auto& row : k) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "  ") << row[c];
            out << '\n';
        }
    }
    if (flag(o, "triangular")) {
        SiltingExtension s = triangular_extension(t, w);
        Json objs = Json::array();
        out << "triangular label " << braid_word_str(s.label) << "\ntriangular objects";
        for (const auto& x : s.objects) {
            objs.push_back({{"side", x.side}, {"vertex", x.vertex}});
            out << " G" << x.side << "(P" << x.vertex << ")";
        }
        out << '\n';
        j["triangular"] = {{"label", braid_word_str(s.label)}, {"objects", objs}};
    }
    return job.format == "json" ? dump(j) : out.str();
}

}

Quiver job_quiver(const JobSpec& job) {
    if (!job.quiver_file.empty()) return parse_quiver(read_file(job.quiver_file));
    if (job.type.empty()) throw ParseError("no quiver given (use --type or --quiver-file)");
    DynkinType t = parse_type(job.type);
    if (job.orient.empty()) return default_quiver(t);
    return build_quiver(t, parse_orientation(job.orient));
}

Json canonical_job(const JobSpec& job) {
    if (!kCommands.count(job.command)) throw ParseError("unknown command '" + job.command + "'");
    Json j{{"version", kCacheVersion}, {"command", job.command}, {"format", job.format}};
    Json o = job.options;
    if (job.command == "braid") {
        DynkinType t = job.quiver_file.empty() ? parse_type(job.type) : job_quiver(job).type;
        validate_type(t);
        j["type"] = t.name();
        if (o.contains("word")) o["word"] = braid_word_str(parse_braid_word(o["word"].get<std::string>(), t.rank));
    } else {
        Quiver q = job_quiver(job);
        j["quiver"] = quiver_to_json(q);
        for (const char* key : {"f", "cone", "omega_orbit"})
            if (o.contains(key)) o[key] = resolve_label(q, o[key].get<std::string>()).str();
        if (o.contains("phi")) o["phi"] = join_labels(resolve_labels(q, o["phi"].get<std::string>()));
        if (o.contains("pair")) {
            Json p = Json::array();
            for (const auto& s : o["pair"]) p.push_back(resolve_label(q, s.get<std::string>()).str());
            o["pair"] = p;
        }
        if (o.contains("lift")) o["lift"] = higgs_to_json(q, higgs_from_json(q, o["lift"]));
        if (job.command == "hom" && !o.contains("floor")) o["floor"] = kDefaultFloor;
        if (job.command == "mpr" && o.contains("f") && !o.contains("power")) o["power"] = 1;
    }
    for (auto it = o.begin(); it != o.end();)
        it = it->is_boolean() && !it->get<bool>() ? o.erase(it) : std::next(it);
    j["options"] = o;
    return j;
}

std::string cache_key(const JobSpec& job) { return sha256_hex(canonical_job(job).dump()); }

std::string execute(const JobSpec& job) {
    Json c = canonical_job(job);
    JobSpec norm = job;
    norm.options = c.at("options");
    if (job.command == "braid") return run_braid(norm, parse_type(c.at("type").get<std::string>()));
    Quiver q = quiver_from_json(c.at("quiver"));
    if (job.command == "quiver") return run_quiver(norm, q);
    if (job.command == "ar") return export_ar(knit_ar_quiver(q), job.format);
    if (job.command == "mpr") return run_mpr(norm, q);
    if (job.command == "ice") return run_ice(norm, q);
    if (job.command == "hom") return run_hom(norm, q);
    return run_higgs(norm, q);
}

namespace {

std::string cache_dir(const JobSpec& job) {
    if (!job.cache_dir.empty()) return job.cache_dir;
    const char* env = std::getenv(kCacheEnv);
    return env ? env : "";
}

bool cache_lookup(const fs::path& file, const std::string& key, std::string& artifact) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return false;
    try {
        Json j = Json::parse(in);
        if (j.at("version").get<int>() != kCacheVersion || j.at("key").get<std::string>() != key) return false;
        artifact = j.at("artifact").get<std::string>();
        return true;
    } catch (const Json::exception&) {
        return false;
    }
}

void cache_store(const fs::path& dir, const fs::path& file, const Json& entry) {
    fs::create_directories(dir);
    fs::path tmp = file;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << entry.dump(2) << '\n';
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, file);
}

}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
    try {
        std::string dir = cache_dir(job);
        if (dir.empty()) {
            out << execute(job);
            return 0;
        }
        Json canon = canonical_job(job);
        std::string key = sha256_hex(canon.dump());
        fs::path file = fs::path(dir) / (key + ".json");
        std::string artifact;
        if (!cache_lookup(file, key, artifact)) {
            artifact = execute(job);
            try {
                cache_store(dir, file, {{"version", kCacheVersion}, {"key", key}, {"job", canon}, {"artifact", artifact}});
            } catch (const std::exception& e) {
                err << "warning: cache not written: " << e.what() << '\n';
            }
        }
        out << artifact;
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const GuardError& e) {
        err << "unsupported: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 4;
    }
}

}
