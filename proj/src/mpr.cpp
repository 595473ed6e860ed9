#include "tricluster/mpr.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <regex>
#include <stdexcept>

namespace tc {

std::string MprLabel::str() const {
    switch (kind) {
    case Kind::Mod: return "Mod(" + std::to_string(index) + ")";
    case Kind::Dzero: return "Dzero(" + std::to_string(index) + ")";
    case Kind::Done: return "Done(" + std::to_string(index) + ")";
    }
    return "";
}

MprLabel parse_mpr_label(const std::string& s) {
    static const std::regex re(R"(\s*(Mod|Dzero|Done)\s*\(\s*(\d+)\s*\)\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw ParseError("cannot parse label '" + s + "'");
    MprLabel l;
    l.kind = m[1] == "Mod" ? MprLabel::Kind::Mod : m[1] == "Dzero" ? MprLabel::Kind::Dzero : MprLabel::Kind::Done;
    l.index = std::stoi(m[2]);
    return l;
}

int MprARQuiver::vertex_of(const MprLabel& l) const {
    auto it = std::find(vertices.begin(), vertices.end(), l);
    if (it == vertices.end()) throw std::invalid_argument("unknown label " + l.str());
    return int(it - vertices.begin()) + 1;
}

int MprARQuiver::arrow_id(int s, int t) const {
    auto it = std::lower_bound(arrows.begin(), arrows.end(), std::pair<int, int>{s, t});
    if (it == arrows.end() || *it != std::pair<int, int>{s, t}) return 0;
    return int(it - arrows.begin()) + 1;
}

namespace {

int simple_vertex(const ZQ& z, int k) {
    for (int id = 1; id <= z.label_count(); ++id) {
        auto d = z.dim_vector(id);
        bool ok = true;
        for (int w = 0; w < z.n(); ++w) ok = ok && d[w] == (w + 1 == k ? 1 : 0);
        if (ok) return id;
    }
    throw std::logic_error("simple module missing");
}

MprARQuiver build(const Quiver& q) {
    const ZQ& z = ZQ::get(q);
    int n = q.n();
    MprARQuiver ar;
    std::map<ZVertex, int> num;
    std::vector<std::pair<ZVertex, int>> dzero;  // (S_k vertex, k)
    for (int k = 1; k <= n; ++k) dzero.push_back({z.label_vertex(simple_vertex(z, k)), k});
    std::sort(dzero.begin(), dzero.end());
    std::vector<int> dzero_num(n + 1, 0);
    int top = 0;
    for (int i = 1; i <= n; ++i) top = std::max(top, z.e(i));
    for (int m = 0; m <= top; ++m) {
        for (auto [s, k] : dzero)
            if (s.m == m - 1) {
                ar.vertices.push_back({MprLabel::Kind::Dzero, k});
                dzero_num[k] = int(ar.vertices.size());
            }
        for (int i = 1; i <= n; ++i) {
            if (m > z.e(i)) continue;
            if (m < z.e(i)) ar.vertices.push_back({MprLabel::Kind::Mod, z.label_id({m, i})});
            else ar.vertices.push_back({MprLabel::Kind::Done, z.star(i)});
            num[{m, i}] = int(ar.vertices.size());
        }
    }
    for (auto [v, a] : num) {
        for (ZVertex w : z.succs(v))
            if (auto it = num.find(w); it != num.end()) ar.arrows.push_back({a, it->second});
        if (v.m >= 1) ar.tau.push_back({a, num.at(z.tau(v))});
    }
    for (auto [s, k] : dzero) {
        ar.arrows.push_back({num.at(s), dzero_num[k]});
        ar.arrows.push_back({dzero_num[k], num.at(z.tau(s, -1))});
    }
    std::sort(ar.arrows.begin(), ar.arrows.end());
    std::sort(ar.tau.begin(), ar.tau.end());
    for (auto [t, s] : ar.tau) {
        Mesh mesh{t, s, {}};
        for (auto [a, b] : ar.arrows)
            if (a == s)
                if (int beta = ar.arrow_id(b, t)) mesh.pairs.push_back({ar.arrow_id(a, b), beta});
        ar.meshes.push_back(std::move(mesh));
    }
    return ar;
}

}

const MprARQuiver& mpr_ar_quiver(const Quiver& q) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<MprARQuiver>> cache;
    std::string key = quiver_to_text(q);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[key];
    if (!slot) slot = std::make_unique<MprARQuiver>(build(q));
    return *slot;
}

std::vector<MprLabel> mpr_indecomposables(const Quiver& q) { return mpr_ar_quiver(q).vertices; }

MprObject mpr_object(const Quiver& q, const MprLabel& l) {
    if (l.kind == MprLabel::Kind::Mod) {
        const auto& p = KQ::get(q).presentation(l.index);
        return {p.p1, p.p0, p.coeff};
    }
    if (l.index < 1 || l.index > q.n()) throw std::invalid_argument("vertex out of range");
    if (l.kind == MprLabel::Kind::Dzero) return {{l.index}, {l.index}, Matrix::identity(1)};
    return {{l.index}, {}, Matrix(0, 1)};
}

MprLabel functor_D(const Quiver& q, int side, int i) {
    if (i < 1 || i > q.n()) throw std::invalid_argument("vertex out of range");
    switch (side) {
    case -1: return {MprLabel::Kind::Mod, ZQ::get(q).label_id({0, i})};
    case 0: return {MprLabel::Kind::Dzero, i};
    case 1: return {MprLabel::Kind::Done, i};
    }
    throw std::invalid_argument("side must be -1, 0 or 1");
}

std::vector<int> functor_C(int which, const MprObject& x) {
    if (which == 0) return x.p0;
    if (which == 1) return x.p1;
    throw std::invalid_argument("C index must be 0 or 1");
}

std::vector<StalkObject> cone(const Quiver& q, const MprLabel& l) {
    const ZQ& z = ZQ::get(q);
    switch (l.kind) {
    case MprLabel::Kind::Mod: return {{l.index, 0}};
    case MprLabel::Kind::Dzero: return {};
    case MprLabel::Kind::Done: return {{z.label_id({0, l.index}), 1}};
    }
    return {};
}

namespace {

ShapePtr product_shape(const Quiver& q) {
    static std::mutex mu;
    static std::map<std::string, ShapePtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[quiver_to_text(q)];
    if (!slot) {
        auto s = std::make_shared<Shape>();
        int n = q.n();
        s->n = 2 * n;
        for (int layer = 0; layer < 2; ++layer)
            for (auto [a, b] : q.arrows) s->arrows.push_back({layer * n + b - 1, layer * n + a - 1});
        for (int v = 0; v < n; ++v) s->arrows.push_back({n + v, v});
        slot = s;
    }
    return slot;
}

Rep sum_of_projectives(const KQ& k, const std::vector<int>& vs) {
    std::vector<Rep> parts;
    for (int v : vs) parts.push_back(k.projective(v).rep);
    return direct_sum(parts, k.shape()).rep;
}

}

Rep mpr_rep(const Quiver& q, const MprObject& x) {
    const KQ& k = KQ::get(q);
    int n = q.n();
    Rep s1 = sum_of_projectives(k, x.p1);
    Rep s0 = sum_of_projectives(k, x.p0);
    Morph f = k.presentation_map(x.p1, x.p0, x.coeff, s1, s0);
    Rep r;
    r.shape = product_shape(q);
    r.dims = s0.dims;
    r.dims.insert(r.dims.end(), s1.dims.begin(), s1.dims.end());
    for (const auto& m : s0.maps) r.maps.push_back(m);
    for (const auto& m : s1.maps) r.maps.push_back(m);
    for (int v = 0; v < n; ++v) r.maps.push_back(f.comps[v]);
    return r;
}

int mpr_hom_dim(const Quiver& q, const MprObject& x, const MprObject& y) {
    return hom_dim(mpr_rep(q, x), mpr_rep(q, y));
}

Rep mpr_cokernel(const Quiver& q, const MprObject& x) {
    const KQ& k = KQ::get(q);
    Rep s1 = sum_of_projectives(k, x.p1);
    Rep s0 = sum_of_projectives(k, x.p0);
    Morph f = k.presentation_map(x.p1, x.p0, x.coeff, s1, s0);
    return cokernel(f, s1, s0).rep;
}

std::string LabelComplex::str() const {
    auto list = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "+" : "") + std::to_string(v[k]);
        return v.empty() ? std::string("0") : s;
    };
    std::string s = deg_m1.empty() ? list(deg0) : "(" + list(deg_m1) + "->" + list(deg0) + ")";
    if (shift) s = "S^" + std::to_string(shift) + " " + s;
    if (d0_tracked) s += " [D0]";
    return s;
}

LabelComplex f_power_label(const Quiver& q, const MprLabel& x, int p) {
    if (p < 0) throw std::invalid_argument("power must be nonnegative");
    const ZQ& z = ZQ::get(q);
    const KQ& k = KQ::get(q);
    const MprARQuiver& ar = mpr_ar_quiver(q);
    ar.vertex_of(x);
    int side;
    ZVertex v;
    switch (x.kind) {
    case MprLabel::Kind::Mod: side = -1; v = z.label_vertex(x.index); break;
    case MprLabel::Kind::Dzero: side = 0; v = {0, x.index}; break;
    default: side = 1; v = {0, x.index}; break;
    }
    for (int t = 0; t < p; ++t) {
        v = z.tau(v, -1);
        if (side == -1 && v.m == z.e(v.i)) {
            side = 1;
            v = {0, z.star(v.i)};
        }
    }
    LabelComplex out;
    if (side == -1) {
        out.deg0 = {ar.vertex_of({MprLabel::Kind::Mod, z.label_id(v)})};
        return out;
    }
    auto kind = side == 0 ? MprLabel::Kind::Dzero : MprLabel::Kind::Done;
    auto [id, shift] = z.stalk_of(v);
    const auto& pres = k.presentation(id);
    for (int a : pres.p1) out.deg_m1.push_back(ar.vertex_of({kind, a}));
    for (int b : pres.p0) out.deg0.push_back(ar.vertex_of({kind, b}));
    out.shift = shift;
    out.d0_tracked = side == 0;
    return out;
}

}
