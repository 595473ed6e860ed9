#include "tricluster/repr.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace tc {

const KQ& KQ::get(const Quiver& q) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<KQ>> cache;
    std::string key = quiver_to_text(q);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[key];
    if (!slot) slot = std::make_unique<KQ>(q);
    return *slot;
}

KQ::KQ(const Quiver& q) : q_(q), z_(ZQ::get(q)) {
    auto s = std::make_shared<Shape>();
    s->n = q.n();
    for (auto [a, b] : q.arrows) s->arrows.push_back({b - 1, a - 1});
    shape_ = s;
    for (int i = 1; i <= q.n(); ++i) proj_.push_back(path_projective(shape_, i - 1));
    std::mt19937_64 rng(0x5eed ^ std::hash<std::string>{}(quiver_to_text(q)));
    for (int id = 1; id <= count(); ++id) {
        Rep r;
        r.shape = shape_;
        r.dims = z_.dim_vector(id);
        for (;;) {
            r.maps.clear();
            for (auto [src, dst] : shape_->arrows) r.maps.push_back(Matrix::random(r.dims[dst], r.dims[src], rng));
            if (tc::hom_dim(r, r) == 1) break;
        }
        reps_.push_back(std::move(r));
    }
    for (int id = 1; id <= count(); ++id) pres_.push_back(present(reps_[id - 1]));
}

std::vector<IndecLabel> KQ::labels() const {
    std::vector<IndecLabel> out;
    for (int id = 1; id <= count(); ++id) out.push_back({id, z_.dim_vector(id)});
    return out;
}

int KQ::identify(const Rep& m) const {
    for (int id = 1; id <= count(); ++id)
        if (reps_[id - 1].dims == m.dims) return id;
    throw std::invalid_argument("not the dimension vector of an indecomposable");
}

Morph KQ::path_map(int a, int b) const {
    const Rep& pb = proj_[b - 1].rep;
    std::vector<Fp> x(pb.dims[a - 1], 0);
    if (x.empty()) throw std::invalid_argument("no path between the given vertices");
    x[0] = 1;
    return from_generator(proj_[a - 1], pb, x);
}

Morph KQ::presentation_map(const std::vector<int>& p1, const std::vector<int>& p0, const Matrix& coeff,
                           const Rep& s1, const Rep& s0) const {
    Morph f = zero_morph(s1, s0);
    std::vector<int> roff(q_.n(), 0);
    for (std::size_t r = 0; r < p0.size(); ++r) {
        std::vector<int> coff(q_.n(), 0);
        for (std::size_t s = 0; s < p1.size(); ++s) {
            const Rep& src = proj_[p1[s] - 1].rep;
            const Rep& dst = proj_[p0[r] - 1].rep;
            if (coeff(int(r), int(s))) {
                Morph g = scale(path_map(p1[s], p0[r]), coeff(int(r), int(s)));
                for (int v = 0; v < q_.n(); ++v) {
                    Matrix blk = f.comps[v].block(roff[v], coff[v], dst.dims[v], src.dims[v]);
                    f.comps[v].set_block(roff[v], coff[v], blk + g.comps[v]);
                }
            }
            for (int v = 0; v < q_.n(); ++v) coff[v] += src.dims[v];
        }
        for (int v = 0; v < q_.n(); ++v) roff[v] += proj_[p0[r] - 1].rep.dims[v];
    }
    return f;
}

KQ::Presentation KQ::present(const Rep& m) const {
    Presentation out;
    int n = q_.n();
    auto rad = radical_spaces(m);
    std::vector<Rep> parts;
    std::vector<std::vector<Fp>> gens;
    for (int v = 0; v < n; ++v) {
        Matrix c = complement_basis(rad[v], m.dims[v]);
        for (int k = 0; k < c.cols(); ++k) {
            out.p0.push_back(v + 1);
            parts.push_back(proj_[v].rep);
            std::vector<Fp> g(m.dims[v]);
            for (int r = 0; r < m.dims[v]; ++r) g[r] = c(r, k);
            gens.push_back(g);
        }
    }
    SumRep p0 = direct_sum(parts, shape_);
    Morph pi = zero_morph(p0.rep, m);
    for (std::size_t k = 0; k < parts.size(); ++k)
        pi = add(pi, compose(from_generator(proj_[out.p0[k] - 1], m, gens[k]), p0.proj[k]));
    SubRep ker = kernel(pi, p0.rep, m);
    auto krad = radical_spaces(ker.rep);
    std::vector<std::vector<Fp>> cols;
    for (int w = 0; w < n; ++w) {
        Matrix c = complement_basis(krad[w], ker.rep.dims[w]);
        for (int k = 0; k < c.cols(); ++k) {
            out.p1.push_back(w + 1);
            std::vector<Fp> x(ker.rep.dims[w]);
            for (int r = 0; r < ker.rep.dims[w]; ++r) x[r] = c(r, k);
            cols.push_back(ker.incl.comps[w].apply(x));
        }
    }
    out.coeff = Matrix(int(out.p0.size()), int(out.p1.size()));
    for (std::size_t s = 0; s < out.p1.size(); ++s) {
        int w = out.p1[s] - 1;
        int off = 0;
        for (std::size_t r = 0; r < out.p0.size(); ++r) {
            int d = proj_[out.p0[r] - 1].rep.dims[w];
            for (int k = 0; k < d; ++k)
                if (k == 0) out.coeff(int(r), int(s)) = cols[s][off];
                else if (cols[s][off + k]) throw std::logic_error("present: non-tree path space");
            off += d;
        }
    }
    return out;
}

std::vector<std::pair<IndecLabel, Rep>> list_indecomposables(const Quiver& q) {
    const KQ& k = KQ::get(q);
    std::vector<std::pair<IndecLabel, Rep>> out;
    for (const auto& l : k.labels()) out.push_back({l, k.rep(l.id)});
    return out;
}

namespace {

void check_same(const Quiver& q, const Rep& m, const Rep& n) {
    if (int(m.dims.size()) != q.n() || int(n.dims.size()) != q.n() || m.maps.size() != q.arrows.size() ||
        n.maps.size() != q.arrows.size())
        throw std::invalid_argument("representations of different quivers");
    check_rep(m);
    check_rep(n);
}

}

int hom_dim(const Quiver& q, const Rep& m, const Rep& n) {
    check_same(q, m, n);
    return hom_dim(m, n);
}

int ext1_dim(const Quiver& q, const Rep& m, const Rep& n) {
    check_same(q, m, n);
    const KQ& k = KQ::get(q);
    std::mt19937_64 rng(0xe71);
    int total = 0;
    for (const auto& part : decompose(m, rng)) {
        ZVertex v = k.zq().label_vertex(k.identify(part.rep));
        if (v.m == 0) continue;
        total += hom_dim(n, k.rep(k.zq().label_id(k.zq().tau(v))));
    }
    return total;
}

int euler_form(const Quiver& q, const std::vector<int>& x, const std::vector<int>& y) {
    int s = 0;
    for (int i = 0; i < q.n(); ++i) s += x[i] * y[i];
    for (auto [a, b] : q.arrows) s -= x[b - 1] * y[a - 1];
    return s;
}

ARQuiver knit_ar_quiver(const Quiver& q) {
    const ZQ& z = ZQ::get(q);
    ARQuiver ar;
    for (int id = 1; id <= z.label_count(); ++id) ar.vertices.push_back({id, z.dim_vector(id)});
    for (int id = 1; id <= z.label_count(); ++id) {
        ZVertex v = z.label_vertex(id);
        for (ZVertex w : z.succs(v))
            if (int t = z.label_id(w)) ar.arrows.push_back({id, t});
        if (int t = z.label_id(z.tau(v))) ar.tau.push_back({id, t});
    }
    std::sort(ar.arrows.begin(), ar.arrows.end());
    return ar;
}

std::pair<int, int> e_exponent(const Quiver& q, int i) {
    const ZQ& z = ZQ::get(q);
    if (i < 1 || i > q.n()) throw std::invalid_argument("vertex out of range");
    return {z.e(i), z.star(i)};
}

namespace {

ZVertex vertex(const ZQ& z, StalkObject x) {
    if (x.label < 1 || x.label > z.label_count()) throw std::invalid_argument("invalid stalk label");
    return z.vertex_of(x.label, x.shift);
}

StalkObject stalk(const ZQ& z, ZVertex v) {
    auto [id, s] = z.stalk_of(v);
    return {id, s};
}

}

StalkObject tau(const Quiver& q, StalkObject x) {
    const ZQ& z = ZQ::get(q);
    return stalk(z, z.tau(vertex(z, x)));
}

StalkObject tau_inv(const Quiver& q, StalkObject x) {
    const ZQ& z = ZQ::get(q);
    return stalk(z, z.tau(vertex(z, x), -1));
}

GradedDim derived_hom(const Quiver& q, StalkObject x, StalkObject y) {
    const ZQ& z = ZQ::get(q);
    return z.derived_hom(vertex(z, x), vertex(z, y));
}

GradedDim pi2_hom(const Quiver& q, StalkObject x, StalkObject y, int floor) {
    const ZQ& z = ZQ::get(q);
    return z.pi2_hom(vertex(z, x), vertex(z, y), floor);
}

int one_cluster_hom(const Quiver& q, StalkObject x, StalkObject y) {
    const ZQ& z = ZQ::get(q);
    return z.one_cluster_hom(vertex(z, x), vertex(z, y));
}

StalkObject projective_stalk(const Quiver& q, int i, int shift) {
    return {ZQ::get(q).label_id({0, i}), shift};
}

}
