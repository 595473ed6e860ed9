#include "tricluster/io.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <cstdio>
#include <sstream>

namespace tc {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad ") + what + " JSON: " + e.what());
    }
}

Json pair_list(const std::vector<std::pair<int, int>>& ps, bool with_mult) {
    Json a = Json::array();
    for (auto [s, t] : ps) a.push_back(with_mult ? Json{s, t, 1} : Json{s, t});
    return a;
}

std::vector<std::pair<int, int>> read_pairs(const Json& a, bool with_mult) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : a) {
        if (with_mult && e.size() == 3 && e.at(2).get<int>() != 1)
            throw ParseError("arrow multiplicities other than 1 do not occur");
        out.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    }
    return out;
}

const char* kind_name(MprLabel::Kind k) {
    switch (k) {
    case MprLabel::Kind::Mod: return "Mod";
    case MprLabel::Kind::Dzero: return "Dzero";
    case MprLabel::Kind::Done: return "Done";
    }
    return "";
}

}

Json quiver_to_json(const Quiver& q) {
    Json j;
    j["family"] = std::string(1, q.type.family);
    j["rank"] = q.type.rank;
    j["arrows"] = pair_list(q.arrows, false);
    return j;
}

Quiver quiver_from_json(const Json& j) {
    return guarded("quiver", [&] {
        DynkinType t = parse_type(j.at("family").get<std::string>() + std::to_string(j.at("rank").get<int>()));
        return build_quiver(t, read_pairs(j.at("arrows"), false));
    });
}

Quiver parse_quiver(const std::string& text) {
    auto p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && text[p] == '{')
        return guarded("quiver", [&] { return quiver_from_json(Json::parse(text)); });
    return parse_quiver_text(text);
}

Json ar_to_json(const ARQuiver& ar) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : ar.vertices) j["vertices"].push_back({{"id", v.id}, {"dim_vector", v.dim_vector}});
    j["arrows"] = pair_list(ar.arrows, true);
    j["tau"] = pair_list(ar.tau, false);
    return j;
}

ARQuiver ar_from_json(const Json& j) {
    return guarded("AR quiver", [&] {
        ARQuiver ar;
        for (const auto& v : j.at("vertices"))
            ar.vertices.push_back({v.at("id").get<int>(), v.at("dim_vector").get<std::vector<int>>()});
        ar.arrows = read_pairs(j.at("arrows"), true);
        ar.tau = read_pairs(j.at("tau"), false);
        return ar;
    });
}

std::string export_ar(const ARQuiver& ar, const std::string& format) {
    if (format == "json") return ar_to_json(ar).dump(2) + "\n";
    std::ostringstream out;
    if (format == "dot") {
        out << "digraph ar {\n";
        for (const auto& v : ar.vertices) {
            out << "  v" << v.id << " [label=\"";
            for (int d : v.dim_vector) out << d;
            out << "\"];\n";
        }
        for (auto [s, t] : ar.arrows) out << "  v" << s << " -> v" << t << ";\n";
        for (auto [x, y] : ar.tau) out << "  v" << x << " -> v" << y << " [style=dashed, constraint=false];\n";
        out << "}\n";
        return out.str();
    }
    if (format == "text") {
        for (const auto& v : ar.vertices) {
            out << "vertex " << v.id << ' ';
            for (int d : v.dim_vector) out << d;
            out << '\n';
        }
        for (auto [s, t] : ar.arrows) out << "arrow " << s << " -> " << t << '\n';
        for (auto [x, y] : ar.tau) out << "tau " << x << " -> " << y << '\n';
        return out.str();
    }
    throw ParseError("unsupported format '" + format + "' for AR quivers");
}

Json mpr_to_json(const MprARQuiver& ar) {
    Json j;
    j["vertices"] = Json::array();
    for (std::size_t k = 0; k < ar.vertices.size(); ++k) {
        const MprLabel& l = ar.vertices[k];
        j["vertices"].push_back({{"id", k + 1}, {"kind", kind_name(l.kind)}, {"index", l.index}, {"label", l.str()}});
    }
    j["arrows"] = pair_list(ar.arrows, true);
    j["tau"] = pair_list(ar.tau, false);
    j["meshes"] = Json::array();
    for (const Mesh& m : ar.meshes)
        j["meshes"].push_back({{"source", m.source}, {"target", m.target}, {"pairs", pair_list(m.pairs, false)}});
    return j;
}

MprARQuiver mpr_from_json(const Json& j) {
    return guarded("mpr AR quiver", [&] {
        MprARQuiver ar;
        int k = 0;
        for (const auto& v : j.at("vertices")) {
            if (v.at("id").get<int>() != ++k) throw ParseError("mpr vertex ids must be 1, 2, ...");
            MprLabel l = parse_mpr_label(v.at("kind").get<std::string>() + "(" + std::to_string(v.at("index").get<int>()) + ")");
            ar.vertices.push_back(l);
        }
        ar.arrows = read_pairs(j.at("arrows"), true);
        ar.tau = read_pairs(j.at("tau"), false);
        for (const auto& m : j.at("meshes"))
            ar.meshes.push_back({m.at("target").get<int>(), m.at("source").get<int>(), read_pairs(m.at("pairs"), false)});
        return ar;
    });
}

std::string export_mpr(const MprARQuiver& ar, const std::string& format) {
    if (format == "json") return mpr_to_json(ar).dump(2) + "\n";
    std::ostringstream out;
    if (format == "dot") {
        out << "digraph mpr {\n";
        for (std::size_t k = 0; k < ar.vertices.size(); ++k) {
            const MprLabel& l = ar.vertices[k];
            out << "  v" << k + 1 << " [label=\"" << k + 1 << "\\n" << l.str() << "\", kind=\"" << kind_name(l.kind) << "\"];\n";
        }
        for (auto [s, t] : ar.arrows) out << "  v" << s << " -> v" << t << ";\n";
        for (auto [x, y] : ar.tau) out << "  v" << x << " -> v" << y << " [style=dashed, constraint=false];\n";
        out << "}\n";
        return out.str();
    }
    if (format == "text") {
        for (std::size_t k = 0; k < ar.vertices.size(); ++k) out << "vertex " << k + 1 << ' ' << ar.vertices[k].str() << '\n';
        for (auto [s, t] : ar.arrows) out << "arrow " << s << " -> " << t << '\n';
        for (auto [x, y] : ar.tau) out << "tau " << x << " -> " << y << '\n';
        return out.str();
    }
    throw ParseError("unsupported format '" + format + "' for mpr AR quivers");
}

std::string graded_cell(const GradedDim& g) {
    if (g.is_zero()) return "-";
    std::string s;
    for (const auto& [d, v] : g.entries) s += (s.empty() ? "" : ",") + std::to_string(d) + ":" + std::to_string(v);
    return s;
}

GradedDim parse_graded_cell(const std::string& s, int floor) {
    GradedDim g;
    g.floor = floor;
    if (s == "-") return g;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto c = item.find(':');
        if (c == std::string::npos) throw ParseError("bad graded cell '" + s + "'");
        try {
            std::size_t u1 = 0, u2 = 0;
            int d = std::stoi(item.substr(0, c), &u1);
            int v = std::stoi(item.substr(c + 1), &u2);
            if (u1 != c || u2 != item.size() - c - 1 || v <= 0) throw std::invalid_argument(item);
            g.add(d, v);
        } catch (const std::logic_error&) {
            throw ParseError("bad graded cell '" + s + "'");
        }
    }
    return g;
}

Json graded_to_json(const GradedDim& g) {
    Json dims = Json::object();
    for (const auto& [d, v] : g.entries) dims[std::to_string(d)] = v;
    return {{"floor", g.exact() ? Json(nullptr) : Json(g.floor)}, {"dims", dims}};
}

GradedDim graded_from_json(const Json& j) {
    return guarded("graded dimension", [&] {
        GradedDim g;
        if (!j.at("floor").is_null()) g.floor = j.at("floor").get<int>();
        for (const auto& [d, v] : j.at("dims").items()) g.add(std::stoi(d), v.get<int>());
        return g;
    });
}

Json hom_table_to_json(const GammaHomTable& t) {
    Json j;
    j["floor"] = t.floor;
    j["labels"] = Json::array();
    for (const auto& l : t.labels) j["labels"].push_back(l.str());
    j["cells"] = Json::array();
    for (const auto& row : t.cells) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(graded_cell(c));
        j["cells"].push_back(r);
    }
    return j;
}

GammaHomTable hom_table_from_json(const Json& j) {
    return guarded("hom table", [&] {
        GammaHomTable t;
        t.floor = j.at("floor").get<int>();
        for (const auto& l : j.at("labels")) t.labels.push_back(parse_mpr_label(l.get<std::string>()));
        for (const auto& r : j.at("cells")) {
            std::vector<GradedDim> row;
            for (const auto& c : r) row.push_back(parse_graded_cell(c.get<std::string>(), t.floor));
            if (row.size() != t.labels.size()) throw ParseError("hom table row has the wrong length");
            t.cells.push_back(std::move(row));
        }
        if (t.cells.size() != t.labels.size()) throw ParseError("hom table has the wrong number of rows");
        return t;
    });
}

std::string export_hom_table(const GammaHomTable& t, const std::string& format) {
    if (format == "json") return hom_table_to_json(t).dump(2) + "\n";
    std::ostringstream out;
    if (format == "tsv") {
        out << "# floor\t" << t.floor << '\n';
        for (std::size_t k = 0; k < t.labels.size(); ++k) out << "# " << k + 1 << '\t' << t.labels[k].str() << '\n';
        for (std::size_t k = 0; k < t.labels.size(); ++k) out << '\t' << k + 1;
        out << '\n';
        for (std::size_t r = 0; r < t.cells.size(); ++r) {
            out << r + 1;
            for (const auto& c : t.cells[r]) out << '\t' << graded_cell(c);
            out << '\n';
        }
        return out.str();
    }
    if (format == "text") {
        int total0 = 0;
        for (std::size_t r = 0; r < t.cells.size(); ++r)
            for (std::size_t c = 0; c < t.cells[r].size(); ++c) {
                out << t.labels[r].str() << " -> " << t.labels[c].str() << "  " << t.cells[r][c].str() << '\n';
                total0 += t.cells[r][c].at(0);
            }
        out << "degree-0 total " << total0 << '\n';
        return out.str();
    }
    throw ParseError("unsupported format '" + format + "' for hom tables");
}

GammaHomTable parse_hom_table_tsv(const std::string& text) {
    GammaHomTable t;
    std::istringstream in(text);
    std::string line;
    bool header = false;
    auto split = [](const std::string& s) {
        std::vector<std::string> f;
        std::istringstream ls(s);
        std::string x;
        while (std::getline(ls, x, '\t')) f.push_back(x);
        return f;
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split(line);
        if (line.rfind("# floor", 0) == 0) {
            t.floor = std::stoi(f.at(1));
        } else if (line[0] == '#') {
            if (f.size() != 2) throw ParseError("bad label line in hom table");
            t.labels.push_back(parse_mpr_label(f[1]));
        } else if (!header) {
            header = true;
            if (f.size() != t.labels.size() + 1) throw ParseError("hom table header does not match the labels");
        } else {
            if (f.size() != t.labels.size() + 1) throw ParseError("hom table row has the wrong length");
            std::vector<GradedDim> row;
            for (std::size_t k = 1; k < f.size(); ++k) row.push_back(parse_graded_cell(f[k], t.floor));
            t.cells.push_back(std::move(row));
        }
    }
    if (t.cells.size() != t.labels.size()) throw ParseError("hom table has the wrong number of rows");
    return t;
}

Json lambda_element_to_json(const Preproj& l, const Preproj::Vec& x) {
    Json j = Json::object();
    for (int k = 0; k < l.dim(); ++k)
        if (x[k]) j[l.word_name(k)] = to_signed(x[k]);
    return j;
}

Preproj::Vec lambda_element_from_json(const Preproj& l, const Json& j) {
    Preproj::Vec x(l.dim(), 0);
    if (j.is_number_integer()) {
        if (j.get<long long>() != 0) throw ParseError("a bare number entry must be 0");
        return x;
    }
    if (j.is_array()) {
        if (int(j.size()) != l.dim())
            throw ParseError("dense entry needs " + std::to_string(l.dim()) + " coordinates");
        for (int k = 0; k < l.dim(); ++k) x[k] = from_int(j[k].get<long long>());
        return x;
    }
    if (!j.is_object()) throw ParseError("entry must be 0, a coordinate array or a {word: coefficient} object");
    for (const auto& [name, c] : j.items()) {
        int found = -1;
        for (int k = 0; k < l.dim() && found < 0; ++k)
            if (l.word_name(k) == name) found = k;
        if (found < 0) throw ParseError("'" + name + "' is not a basis word of the preprojective algebra");
        x[found] = fadd(x[found], from_int(c.get<long long>()));
    }
    return x;
}

Json higgs_to_json(const Quiver& q, const HiggsObject& x) {
    const Preproj& l = Preproj::get(q);
    Json m = Json::array();
    for (const auto& row : x.u) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(lambda_element_to_json(l, e));
        m.push_back(r);
    }
    return {{"p1", x.p1}, {"p0", x.p0}, {"matrix", m}};
}

HiggsObject higgs_from_json(const Quiver& q, const Json& j) {
    return guarded("Higgs object", [&] {
        const Preproj& l = Preproj::get(q);
        HiggsObject x;
        x.p1 = j.at("p1").get<std::vector<int>>();
        x.p0 = j.at("p0").get<std::vector<int>>();
        const Json& m = j.at("matrix");
        if (m.size() != x.p0.size()) throw ParseError("matrix needs one row per entry of p0");
        for (const auto& r : m) {
            if (r.size() != x.p1.size()) throw ParseError("matrix rows need one entry per entry of p1");
            std::vector<Preproj::Vec> row;
            for (const auto& e : r) row.push_back(lambda_element_from_json(l, e));
            x.u.push_back(std::move(row));
        }
        check_higgs(q, x);
        return x;
    });
}

Json braid_word_to_json(const BraidWord& w) {
    Json a = Json::array();
    for (const auto& b : w) a.push_back(b.sign * b.gen);
    return a;
}

BraidWord braid_word_from_json(const Json& j) {
    return guarded("braid word", [&] {
        BraidWord w;
        for (const auto& e : j) {
            int g = e.get<int>();
            if (g == 0) throw ParseError("braid generator 0 does not exist");
            w.push_back({g < 0 ? -g : g, g < 0 ? -1 : 1});
        }
        return w;
    });
}

Json garside_to_json(const DynkinType& t, const GarsideForm& f) {
    Json fs = Json::array();
    for (const auto& w : f.factors) fs.push_back(braid_word_to_json(canonical_lift(t, w)));
    return {{"infimum", f.infimum}, {"factors", fs}};
}

GarsideForm garside_from_json(const DynkinType& t, const Json& j) {
    return guarded("Garside form", [&] {
        GarsideForm f;
        f.infimum = j.at("infimum").get<int>();
        for (const auto& w : j.at("factors")) f.factors.push_back(project_to_weyl(t, braid_word_from_json(w)));
        return f;
    });
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("SHA-256 digest failed");
    std::string hex;
    char buf[3];
    for (unsigned k = 0; k < len; ++k) {
        std::snprintf(buf, sizeof buf, "%02x", md[k]);
        hex += buf;
    }
    return hex;
}

}
