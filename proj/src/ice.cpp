#include "tricluster/ice.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace tc {

using nlohmann::json;

IceQuiver build_ice_quiver(const Quiver& q) {
    const MprARQuiver& ar = mpr_ar_quiver(q);
    IceQuiver iq;
    for (std::size_t k = 0; k < ar.vertices.size(); ++k) {
        const MprLabel& l = ar.vertices[k];
        bool frozen = l.kind != MprLabel::Kind::Mod || ZQ::get(q).label_vertex(l.index).m == 0;
        iq.vertices.push_back({int(k) + 1, frozen, l});
    }
    for (auto [s, t] : ar.arrows) iq.arrows.push_back({s, t, false, ArrowOrigin::AR});
    for (const Mesh& m : ar.meshes) {
        iq.arrows.push_back({m.target, m.source, false, ArrowOrigin::MeshReverse});
        iq.potential.push_back({int(iq.arrows.size()), m.pairs});
    }
    for (int side : {-1, 0, 1})
        for (auto [i, j] : q.arrows) {
            int a = ar.vertex_of(functor_D(q, side, i));
            int b = ar.vertex_of(functor_D(q, side, j));
            if (int id = ar.arrow_id(a, b)) iq.arrows[id - 1].frozen = true;
            else iq.arrows.push_back({b, a, true, ArrowOrigin::Rule2Frozen});
        }
    return iq;
}

SubQuiver mutable_part(const IceQuiver& iq) {
    SubQuiver s;
    std::vector<char> live(iq.vertices.size() + 1, 0);
    for (const auto& v : iq.vertices)
        if (!v.frozen) {
            s.vertices.push_back(v.id);
            live[v.id] = 1;
        }
    for (const auto& a : iq.arrows)
        if (!a.frozen && live[a.src] && live[a.dst]) s.arrows.push_back({a.src, a.dst});
    return s;
}

const char* origin_name(ArrowOrigin o) {
    switch (o) {
    case ArrowOrigin::AR: return "AR";
    case ArrowOrigin::MeshReverse: return "mesh-reverse";
    case ArrowOrigin::Rule2Frozen: return "rule2-frozen";
    }
    return "";
}

namespace {

ArrowOrigin parse_origin(const std::string& s) {
    if (s == "AR") return ArrowOrigin::AR;
    if (s == "mesh-reverse") return ArrowOrigin::MeshReverse;
    if (s == "rule2-frozen") return ArrowOrigin::Rule2Frozen;
    throw ParseError("unknown arrow origin '" + s + "'");
}

json to_json(const IceQuiver& iq) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : iq.vertices)
        j["vertices"].push_back({{"id", v.id}, {"frozen", v.frozen}, {"label", v.label.str()}});
    j["arrows"] = json::array();
    for (std::size_t k = 0; k < iq.arrows.size(); ++k) {
        const auto& a = iq.arrows[k];
        j["arrows"].push_back({{"id", k + 1}, {"src", a.src}, {"dst", a.dst}, {"frozen", a.frozen}, {"origin", origin_name(a.origin)}});
    }
    j["potential"] = json::array();
    for (const auto& t : iq.potential) {
        json pairs = json::array();
        for (auto [a, b] : t.pairs) pairs.push_back({a, b});
        j["potential"].push_back({{"rho", t.rho}, {"pairs", pairs}});
    }
    return j;
}

std::string to_dot(const IceQuiver& iq) {
    std::ostringstream out;
    out << "digraph ice {\n";
    for (const auto& v : iq.vertices)
        out << "  v" << v.id << " [label=\"" << v.id << "\\n" << v.label.str() << "\", shape="
            << (v.frozen ? "box" : "ellipse") << "];\n";
    for (const auto& a : iq.arrows) {
        out << "  v" << a.src << " -> v" << a.dst;
        if (a.frozen) out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}

std::string export_ice(const IceQuiver& iq, const std::string& format) {
    if (format == "json") return to_json(iq).dump(2) + "\n";
    if (format == "dot") return to_dot(iq);
    throw ParseError("unsupported format '" + format + "' for ice quivers");
}

IceQuiver parse_ice_json(const std::string& text) {
    IceQuiver iq;
    try {
        json j = json::parse(text);
        for (const auto& v : j.at("vertices"))
            iq.vertices.push_back({v.at("id").get<int>(), v.at("frozen").get<bool>(), parse_mpr_label(v.at("label").get<std::string>())});
        for (const auto& a : j.at("arrows"))
            iq.arrows.push_back({a.at("src").get<int>(), a.at("dst").get<int>(), a.at("frozen").get<bool>(),
                                 parse_origin(a.at("origin").get<std::string>())});
        for (const auto& t : j.at("potential")) {
            PotentialTerm term{t.at("rho").get<int>(), {}};
            for (const auto& p : t.at("pairs")) term.pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
            iq.potential.push_back(std::move(term));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad ice quiver JSON: ") + e.what());
    }
    return iq;
}

}
