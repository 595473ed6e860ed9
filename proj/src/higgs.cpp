#include "tricluster/higgs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tc {

LambdaInfo preprojective_algebra(const Quiver& q) {
    const Preproj& l = Preproj::get(q);
    LambdaInfo info{l.dim(), l.top_degree(), {}};
    for (int v : l.nakayama_permutation()) info.nakayama.push_back(v + 1);
    return info;
}

TQ::TQ(const Quiver& q, bool twisted) : l_(Preproj::get(q)), twisted_(twisted) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (kBlocks[i][j]) blocks_.push_back({i, j});
}

std::array<int, 3> TQ::locate(int k) const {
    auto [r, c] = blocks_[k / l_.dim()];
    return {r, c, k % l_.dim()};
}

int TQ::index(int row, int col, int lk) const {
    for (int b = 0; b < int(blocks_.size()); ++b)
        if (blocks_[b] == std::pair<int, int>{row, col}) return b * l_.dim() + lk;
    return -1;
}

std::vector<Fp> TQ::unit(int k) const {
    std::vector<Fp> v(dim(), 0);
    v[k] = 1;
    return v;
}

std::vector<Fp> TQ::mul(const std::vector<Fp>& x, const std::vector<Fp>& y) const {
    const int d = l_.dim();
    std::vector<Fp> out(dim(), 0);
    auto part = [&](const std::vector<Fp>& v, int b) {
        Preproj::Vec p(v.begin() + b * d, v.begin() + (b + 1) * d);
        return p;
    };
    auto nonzero = [](const Preproj::Vec& v) {
        return std::any_of(v.begin(), v.end(), [](Fp c) { return c != 0; });
    };
    for (int bx = 0; bx < int(blocks_.size()); ++bx) {
        auto px = part(x, bx);
        if (!nonzero(px)) continue;
        for (int by = 0; by < int(blocks_.size()); ++by) {
            auto [i, j] = blocks_[bx];
            auto [j2, k] = blocks_[by];
            if (j != j2 || !kBlocks[i][k]) continue;
            auto py = part(y, by);
            if (!nonzero(py)) continue;
            bool twisted = twisted_ && i == 0 && j == 0 && k == 2;
            auto pr = l_.mul(twisted ? l_.nu(px) : px, py);
            int off = index(i, k, 0);
            for (int t = 0; t < d; ++t) out[off + t] = fadd(out[off + t], pr[t]);
        }
    }
    return out;
}

std::vector<Fp> TQ::idempotent(int e) const {
    int b = e / l_.n(), v = e % l_.n();
    return unit(index(b, b, v));
}

std::vector<std::vector<Fp>> TQ::radical_generators() const {
    std::vector<std::vector<Fp>> g;
    for (int k = 0; k < l_.dim(); ++k)
        if (l_.basis(k).degree == 1)
            for (int b = 0; b < 3; ++b) g.push_back(unit(index(b, b, k)));
    for (int v = 0; v < l_.n(); ++v) {
        g.push_back(unit(index(1, 0, v)));
        g.push_back(unit(index(2, 1, v)));
        g.push_back(unit(index(0, 2, v)));
    }
    return g;
}

namespace {

Matrix span_of(const std::vector<std::vector<Fp>>& vs, int d) {
    Matrix m(d, int(vs.size()));
    for (int j = 0; j < int(vs.size()); ++j)
        for (int i = 0; i < d; ++i) m(i, j) = vs[j][i];
    return column_basis(m);
}

// socle of the one-sided ideal spanned by the columns of w; right = true for x * rad = 0
Matrix socle(const TQ& t, const Matrix& w, bool right) {
    const int d = t.dim();
    auto gens = t.radical_generators();
    Matrix sys(0, w.cols());
    for (const auto& g : gens) {
        Matrix blk(d, w.cols());
        for (int j = 0; j < w.cols(); ++j) {
            std::vector<Fp> x(d);
            for (int i = 0; i < d; ++i) x[i] = w(i, j);
            auto p = right ? t.mul(x, g) : t.mul(g, x);
            for (int i = 0; i < d; ++i) blk(i, j) = p[i];
        }
        sys = vstack(sys, blk);
    }
    return w * nullspace(sys);
}

// smallest k <= 12 with nu^k inner, nu the Nakayama automorphism of a random Frobenius form
int nakayama_automorphism_order(const TQ& t) {
    const int d = t.dim();
    std::vector<std::vector<std::vector<Fp>>> prod(d, std::vector<std::vector<Fp>>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) prod[i][j] = t.mul(t.unit(i), t.unit(j));
    std::mt19937_64 rng(0xf20b);
    Matrix nu;
    for (;;) {
        std::vector<Fp> phi(d);
        for (auto& c : phi) c = Fp(rng() % kPrime);
        Matrix g(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Fp s = 0;
                for (int k = 0; k < d; ++k) s = fadd(s, fmul(phi[k], prod[i][j][k]));
                g(i, j) = s;
            }
        if (!invertible(g)) continue;
        nu = inverse(g) * g.transpose();
        break;
    }
    // left and right multiplication by basis elements, as matrices acting on coordinates
    auto mult = [&](const std::vector<Fp>& x, bool left) {
        Matrix m(d, d);
        for (int i = 0; i < d; ++i) {
            if (!x[i]) continue;
            for (int j = 0; j < d; ++j) {
                const auto& p = left ? prod[i][j] : prod[j][i];
                for (int k = 0; k < d; ++k)
                    if (p[k]) m(k, j) = fadd(m(k, j), fmul(x[i], p[k]));
            }
        }
        return m;
    };
    Matrix pw = Matrix::identity(d);
    for (int k = 1; k <= 12; ++k) {
        pw = nu * pw;
        // u with nu^k(b_j) u = u b_j for all j
        Matrix sys(0, d);
        for (int j = 0; j < d; ++j) {
            std::vector<Fp> img(d);
            for (int i = 0; i < d; ++i) img[i] = pw(i, j);
            sys = vstack(sys, mult(img, true) - mult(t.unit(j), false));
        }
        Matrix ns = nullspace(sys);
        if (ns.cols() == 0) continue;
        for (int tries = 0; tries < 4; ++tries) {
            std::vector<Fp> u(d, 0);
            for (int c = 0; c < ns.cols(); ++c) {
                Fp a = Fp(rng() % kPrime);
                for (int i = 0; i < d; ++i) u[i] = fadd(u[i], fmul(a, ns(i, c)));
            }
            if (invertible(mult(u, true))) return k;
        }
    }
    return 0;
}

}

TQAlgebra tq_algebra(const Quiver& q, bool twisted) {
    TQ t(q, twisted);
    const int d = t.dim();
    TQAlgebra out;
    out.lambda_dim = t.lambda().dim();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.entry_dims[i][j] = TQ::kBlocks[i][j] ? out.lambda_dim : 0;
    out.total_dim = d;
    const int ne = t.idempotent_count();
    out.selfinjective = true;
    out.nakayama_perm.assign(ne, -1);
    for (int e = 0; e < ne; ++e) {
        auto eps = t.idempotent(e);
        for (bool right : {true, false}) {
            std::vector<std::vector<Fp>> vs;
            for (int k = 0; k < d; ++k) vs.push_back(right ? t.mul(eps, t.unit(k)) : t.mul(t.unit(k), eps));
            Matrix s = socle(t, span_of(vs, d), right);
            if (s.cols() != 1) {
                out.selfinjective = false;
                continue;
            }
            if (!right) continue;
            std::vector<Fp> x(d);
            for (int i = 0; i < d; ++i) x[i] = s(i, 0);
            for (int f = 0; f < ne; ++f)
                if (t.mul(x, t.idempotent(f)) == x) out.nakayama_perm[e] = f;
        }
    }
    out.automorphism_order = nakayama_automorphism_order(t);
    std::vector<int> sorted = out.nakayama_perm;
    std::sort(sorted.begin(), sorted.end());
    for (int e = 0; e < ne; ++e)
        if (sorted[e] != e) out.selfinjective = false;
    if (out.selfinjective) {
        int order = 1;
        for (int e = 0; e < ne; ++e) {
            int len = 1;
            for (int f = out.nakayama_perm[e]; f != e; f = out.nakayama_perm[f]) ++len;
            order = std::lcm(order, len);
        }
        out.nakayama_order = order;
    }
    return out;
}

void check_higgs(const Quiver& q, const HiggsObject& x) {
    const Preproj& l = Preproj::get(q);
    for (int v : x.p1)
        if (v < 1 || v > q.n()) throw ParseError("vertex out of range in p1");
    for (int v : x.p0)
        if (v < 1 || v > q.n()) throw ParseError("vertex out of range in p0");
    if (x.u.size() != x.p0.size()) throw ParseError("matrix must have one row per p0 summand");
    for (int r = 0; r < int(x.p0.size()); ++r) {
        if (x.u[r].size() != x.p1.size()) throw ParseError("matrix must have one column per p1 summand");
        for (int s = 0; s < int(x.p1.size()); ++s) {
            const auto& e = x.u[r][s];
            if (int(e.size()) != l.dim()) throw ParseError("entry has the wrong length");
            for (int k = 0; k < l.dim(); ++k)
                if (e[k] && (l.basis(k).src != x.p0[r] - 1 || l.basis(k).dst != x.p1[s] - 1))
                    throw ParseError("entry " + std::to_string(r + 1) + "," + std::to_string(s + 1) +
                                     " is not in e_p0 L e_p1");
        }
    }
}

HiggsObject phi_image(const Quiver& q, const MprLabel& x) {
    const Preproj& l = Preproj::get(q);
    MprObject o = mpr_object(q, x);
    HiggsObject h{o.p1, o.p0, {}};
    for (int r = 0; r < int(o.p0.size()); ++r) {
        std::vector<Preproj::Vec> row;
        for (int s = 0; s < int(o.p1.size()); ++s) {
            auto e = l.q_path_between(o.p1[s] - 1, o.p0[r] - 1);
            for (auto& c : e) c = fmul(c, o.coeff(r, s));
            row.push_back(std::move(e));
        }
        h.u.push_back(std::move(row));
    }
    return h;
}

HiggsObject higgs_sum(const Quiver& q, const std::vector<HiggsObject>& xs) {
    const int d = Preproj::get(q).dim();
    HiggsObject h;
    for (const auto& x : xs) {
        h.p1.insert(h.p1.end(), x.p1.begin(), x.p1.end());
        h.p0.insert(h.p0.end(), x.p0.begin(), x.p0.end());
    }
    h.u.assign(h.p0.size(), std::vector<Preproj::Vec>(h.p1.size(), Preproj::Vec(d, 0)));
    std::size_t r0 = 0, c0 = 0;
    for (const auto& x : xs) {
        for (std::size_t r = 0; r < x.p0.size(); ++r)
            for (std::size_t s = 0; s < x.p1.size(); ++s) h.u[r0 + r][c0 + s] = x.u[r][s];
        r0 += x.p0.size();
        c0 += x.p1.size();
    }
    return h;
}

HiggsObject phi_image(const Quiver& q, const std::vector<MprLabel>& xs) {
    std::vector<HiggsObject> parts;
    for (const auto& x : xs) parts.push_back(phi_image(q, x));
    return higgs_sum(q, parts);
}

namespace {

SumRep projective_sum(const Preproj& l, const std::vector<int>& vs) {
    std::vector<Rep> parts;
    for (int v : vs) parts.push_back(l.projective(v - 1));
    return direct_sum(parts, l.shape());
}

// coordinates in the sum at vertex w of the element given by one Lambda vector per summand
std::vector<Fp> sum_coords(const Preproj& l, const std::vector<int>& vs, int w,
                           const std::vector<const Preproj::Vec*>& parts) {
    std::vector<Fp> y;
    for (int r = 0; r < int(vs.size()); ++r)
        for (int k : l.proj_basis(vs[r] - 1, w)) y.push_back((*parts[r])[k]);
    return y;
}

Morph sum_map(const Preproj& l, const HiggsObject& x, const SumRep& s1, const SumRep& s0) {
    Morph f = zero_morph(s1.rep, s0.rep);
    for (int s = 0; s < int(x.p1.size()); ++s) {
        std::vector<const Preproj::Vec*> col;
        for (int r = 0; r < int(x.p0.size()); ++r) col.push_back(&x.u[r][s]);
        auto y = sum_coords(l, x.p0, x.p1[s] - 1, col);
        f = add(f, compose(l.from_generator(x.p1[s] - 1, s0.rep, y), s1.proj[s]));
    }
    return f;
}

Preproj::Vec vsub(Preproj::Vec a, const Preproj::Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = fsub(a[i], b[i]);
    return a;
}

Preproj::Vec vscale(Preproj::Vec a, Fp c) {
    for (auto& x : a) x = fmul(x, c);
    return a;
}

}

Morph higgs_map(const Quiver& q, const HiggsObject& x, Rep& u1, Rep& u0) {
    const Preproj& l = Preproj::get(q);
    SumRep s1 = projective_sum(l, x.p1), s0 = projective_sum(l, x.p0);
    u1 = s1.rep;
    u0 = s0.rep;
    return sum_map(l, x, s1, s0);
}

Rep higgs_cokernel(const Quiver& q, const HiggsObject& x) {
    Rep u1, u0;
    Morph f = higgs_map(q, x, u1, u0);
    return cokernel(f, u1, u0).rep;
}

HiggsObject strip_isos(const Quiver& q, const HiggsObject& x, std::vector<int>& iso) {
    const Preproj& l = Preproj::get(q);
    iso.assign(q.n(), 0);
    HiggsObject h = x;
    for (;;) {
        int pr = -1, ps = -1;
        for (int r = 0; r < int(h.p0.size()) && pr < 0; ++r)
            for (int s = 0; s < int(h.p1.size()); ++s)
                if (h.p0[r] == h.p1[s] && h.u[r][s][h.p0[r] - 1]) {
                    pr = r;
                    ps = s;
                    break;
                }
        if (pr < 0) return h;
        const int v = h.p0[pr] - 1;
        const Preproj::Vec& x0 = h.u[pr][ps];
        Fp c = finv(x0[v]);
        Preproj::Vec nil = vscale(x0, c);
        nil[v] = 0;
        for (auto& t : nil) t = fneg(t);
        Preproj::Vec inv = l.vertex(v), pw = l.vertex(v);
        for (int k = 0; k < l.top_degree(); ++k) {
            pw = l.mul(pw, nil);
            for (int i = 0; i < l.dim(); ++i) inv[i] = fadd(inv[i], pw[i]);
        }
        inv = vscale(inv, c);
        for (int j = 0; j < int(h.p1.size()); ++j) {
            if (j == ps) continue;
            auto lam = l.mul(inv, h.u[pr][j]);
            for (int r = 0; r < int(h.p0.size()); ++r) h.u[r][j] = vsub(h.u[r][j], l.mul(h.u[r][ps], lam));
        }
        for (int r = 0; r < int(h.p0.size()); ++r) {
            if (r == pr) continue;
            auto mu = l.mul(h.u[r][ps], inv);
            for (int j = 0; j < int(h.p1.size()); ++j) h.u[r][j] = vsub(h.u[r][j], l.mul(mu, h.u[pr][j]));
        }
        h.u.erase(h.u.begin() + pr);
        for (auto& row : h.u) row.erase(row.begin() + ps);
        h.p0.erase(h.p0.begin() + pr);
        h.p1.erase(h.p1.begin() + ps);
        ++iso[v];
    }
}

HiggsObject strip_split_epi(const Quiver& q, const HiggsObject& x, std::vector<int>& iso, std::vector<int>& zero) {
    const Preproj& l = Preproj::get(q);
    HiggsObject h = strip_isos(q, x, iso);
    zero.assign(q.n(), 0);
    Rep u1, u0;
    Morph f = higgs_map(q, h, u1, u0);
    SubRep k = kernel(f, u1, u0);
    std::vector<int> drop;
    for (int v = 0; v < q.n(); ++v) {
        std::vector<int> gens, pos;
        int off = 0;
        for (int s = 0; s < int(h.p1.size()); ++s) {
            if (h.p1[s] - 1 == v) {
                gens.push_back(s);
                pos.push_back(off);
            }
            off += l.projective(h.p1[s] - 1).dims[v];
        }
        if (gens.empty() || k.rep.dims[v] == 0) continue;
        Matrix t(k.rep.dims[v], int(gens.size()));
        for (int i = 0; i < k.rep.dims[v]; ++i)
            for (int j = 0; j < int(gens.size()); ++j) t(i, j) = k.incl.comps[v](pos[j], i);
        for (int p : rref(t).pivots) {
            drop.push_back(gens[p]);
            ++zero[v];
        }
    }
    std::sort(drop.rbegin(), drop.rend());
    for (int s : drop) {
        for (auto& row : h.u) row.erase(row.begin() + s);
        h.p1.erase(h.p1.begin() + s);
    }
    return h;
}

bool higgs_isomorphic(const Quiver& q, const HiggsObject& a, const HiggsObject& b) {
    std::vector<int> ia, ib;
    HiggsObject ra = strip_isos(q, a, ia), rb = strip_isos(q, b, ib);
    if (ia != ib) return false;
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted(ra.p1) != sorted(rb.p1) || sorted(ra.p0) != sorted(rb.p0)) return false;
    Rep ca = higgs_cokernel(q, ra), cb = higgs_cokernel(q, rb);
    if (ca.dims != cb.dims) return false;
    std::mt19937_64 rng(0x41c9);
    return isomorphic(ca, cb, rng);
}

HiggsObject higgs_presentation(const Quiver& q, const Rep& m) {
    const Preproj& l = Preproj::get(q);
    auto cover = [&](const Rep& x, std::vector<int>& verts, std::vector<std::vector<Fp>>& gens) {
        auto rad = radical_spaces(x);
        for (int v = 0; v < q.n(); ++v) {
            Matrix c = complement_basis(rad[v], x.dims[v]);
            for (int j = 0; j < c.cols(); ++j) {
                verts.push_back(v + 1);
                std::vector<Fp> g(x.dims[v]);
                for (int i = 0; i < x.dims[v]; ++i) g[i] = c(i, j);
                gens.push_back(std::move(g));
            }
        }
    };
    HiggsObject h;
    std::vector<std::vector<Fp>> g0, g1;
    cover(m, h.p0, g0);
    SumRep p0 = projective_sum(l, h.p0);
    Morph pi = zero_morph(p0.rep, m);
    for (int r = 0; r < int(h.p0.size()); ++r)
        pi = add(pi, compose(l.from_generator(h.p0[r] - 1, m, g0[r]), p0.proj[r]));
    SubRep k = kernel(pi, p0.rep, m);
    cover(k.rep, h.p1, g1);
    const int d = l.dim();
    h.u.assign(h.p0.size(), std::vector<Preproj::Vec>(h.p1.size(), Preproj::Vec(d, 0)));
    for (int s = 0; s < int(h.p1.size()); ++s) {
        const int w = h.p1[s] - 1;
        auto y = k.incl.comps[w].apply(g1[s]);
        int pos = 0;
        for (int r = 0; r < int(h.p0.size()); ++r)
            for (int b : l.proj_basis(h.p0[r] - 1, w)) h.u[r][s][b] = y[pos++];
    }
    return h;
}

namespace {

void guard_small_a(const Quiver& q) {
    if (q.type.family != 'A' || q.n() > 4) throw GuardError("only types A1..A4 are supported, got " + q.type.name());
}

struct TLambda {
    MprLabel label;
    HiggsObject phi;
    Rep rep;
    Morph proj;  // U_0 of phi onto rep
};

std::vector<TLambda> t_lambda(const Quiver& q) {
    std::vector<TLambda> out;
    for (int id = 1; id <= KQ::get(q).count(); ++id) {
        MprLabel m{MprLabel::Kind::Mod, id};
        HiggsObject h = phi_image(q, m);
        Rep u1, u0;
        Morph f = higgs_map(q, h, u1, u0);
        QuotRep c = cokernel(f, u1, u0);
        out.push_back({m, h, c.rep, c.proj});
    }
    return out;
}

Morph random_iso(const Rep& a, const Rep& b, std::mt19937_64& rng) {
    if (a.dims != b.dims) throw std::logic_error("no isomorphism");
    auto basis = hom_basis(a, b);
    for (int t = 0; t < 8 && !basis.empty(); ++t) {
        Morph f = random_combination(basis, a, b, rng);
        if (is_iso(f)) return f;
    }
    throw std::logic_error("no isomorphism");
}

}

HiggsLift lift_morphism(const Quiver& q, const HiggsObject& u) {
    guard_small_a(q);
    check_higgs(q, u);
    const Preproj& l = Preproj::get(q);
    std::mt19937_64 rng(0x11f7);
    HiggsLift out;

    std::vector<int> iso;
    HiggsObject red = strip_isos(q, u, iso);
    for (int i = 1; i <= q.n(); ++i)
        for (int k = 0; k < iso[i - 1]; ++k) out.frozen.push_back({MprLabel::Kind::Dzero, i});

    Rep u1, u0;
    Morph f = higgs_map(q, red, u1, u0);
    QuotRep mq = cokernel(f, u1, u0);
    const Rep& m = mq.rep;
    SubRep syz = kernel(mq.proj, u0, m);
    auto top1 = top_dims(syz.rep);
    for (int i = 1; i <= q.n(); ++i) {
        int extra = int(std::count(red.p1.begin(), red.p1.end(), i)) - top1[i - 1];
        if (extra < 0) throw std::logic_error("presentation is smaller than minimal");
        for (int k = 0; k < extra; ++k) out.frozen.push_back({MprLabel::Kind::Done, i});
    }

    auto tl = t_lambda(q);
    std::vector<int> t0_idx;
    std::vector<Morph> t0_maps;
    for (int j = 0; j < int(tl.size()); ++j)
        for (auto& g : hom_basis(tl[j].rep, m)) {
            t0_idx.push_back(j);
            t0_maps.push_back(std::move(g));
        }
    // trim to a minimal approximation: drop copies that factor through the others
    auto flat = [](const Morph& f) {
        std::vector<Fp> v;
        for (const auto& c : f.comps)
            for (int i = 0; i < c.rows(); ++i)
                for (int j = 0; j < c.cols(); ++j) v.push_back(c(i, j));
        return v;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (int k = 0; k < int(t0_idx.size()) && !changed; ++k) {
            std::vector<std::vector<Fp>> cols;
            for (int j = 0; j < int(t0_idx.size()); ++j)
                if (j != k)
                    for (const auto& h : hom_basis(tl[t0_idx[k]].rep, tl[t0_idx[j]].rep))
                        cols.push_back(flat(compose(t0_maps[j], h)));
            auto target = flat(t0_maps[k]);
            Matrix a(int(target.size()), int(cols.size())), b(int(target.size()), 1), x;
            for (int i = 0; i < a.rows(); ++i) {
                for (int j = 0; j < a.cols(); ++j) a(i, j) = cols[j][i];
                b(i, 0) = target[i];
            }
            if (solve(a, b, x)) {
                t0_idx.erase(t0_idx.begin() + k);
                t0_maps.erase(t0_maps.begin() + k);
                changed = true;
            }
        }
    }
    std::vector<Rep> t0_parts;
    for (int j : t0_idx) t0_parts.push_back(tl[j].rep);
    SumRep t0 = direct_sum(t0_parts, l.shape());
    Morph approx = zero_morph(t0.rep, m);
    for (int k = 0; k < int(t0_idx.size()); ++k) approx = add(approx, compose(t0_maps[k], t0.proj[k]));

    SubRep k1 = kernel(approx, t0.rep, m);
    std::vector<int> t1_idx;
    std::vector<Morph> iotas;
    for (const auto& s : decompose(k1.rep, rng)) {
        int found = -1;
        for (int j = 0; j < int(tl.size()) && found < 0; ++j)
            if (tl[j].rep.dims == s.rep.dims && isomorphic(tl[j].rep, s.rep, rng)) found = j;
        if (found < 0) throw std::logic_error("approximation kernel is not in add T");
        Morph theta = random_iso(tl[found].rep, s.rep, rng);
        t1_idx.push_back(found);
        iotas.push_back(compose(k1.incl, compose(s.incl, theta)));
    }

    std::vector<HiggsObject> pres0, pres1;
    for (int j : t0_idx) {
        out.t0.push_back(tl[j].label);
        pres0.push_back(tl[j].phi);
    }
    for (int j : t1_idx) {
        out.t1.push_back(tl[j].label);
        pres1.push_back(tl[j].phi);
    }
    HiggsObject pi0 = higgs_sum(q, pres0), pi1 = higgs_sum(q, pres1);

    auto b_sum = [&](const std::vector<int>& idx, std::vector<Rep>& blocks) {
        for (int j : idx) {
            Rep a1, a0;
            higgs_map(q, tl[j].phi, a1, a0);
            blocks.push_back(a0);
        }
        return direct_sum(blocks, l.shape());
    };
    std::vector<Rep> bb0, bb1;
    SumRep b0 = b_sum(t0_idx, bb0), b1 = b_sum(t1_idx, bb1);
    Morph c0 = zero_morph(b0.rep, t0.rep);
    for (int k = 0; k < int(t0_idx.size()); ++k)
        c0 = add(c0, compose(t0.inj[k], compose(tl[t0_idx[k]].proj, b0.proj[k])));
    Morph c1 = zero_morph(b1.rep, t0.rep);
    for (int k = 0; k < int(t1_idx.size()); ++k)
        c1 = add(c1, compose(iotas[k], compose(tl[t1_idx[k]].proj, b1.proj[k])));

    // lift c1 through c0 generator by generator
    const int d = l.dim();
    std::vector<std::vector<Preproj::Vec>> h0(pi0.p0.size(), std::vector<Preproj::Vec>(pi1.p0.size()));
    for (int g = 0; g < int(pi1.p0.size()); ++g) {
        const int v = pi1.p0[g] - 1;
        std::vector<Fp> gen(b1.rep.dims[v], 0);
        int at = 0;
        for (int r = 0; r < g; ++r) at += l.projective(pi1.p0[r] - 1).dims[v];
        gen[at] = 1;
        Matrix y(t0.rep.dims[v], 1);
        auto yv = c1.comps[v].apply(gen);
        for (int i = 0; i < int(yv.size()); ++i) y(i, 0) = yv[i];
        Matrix x;
        if (!solve(c0.comps[v], y, x)) throw std::logic_error("cannot lift through the presentation");
        int pos = 0;
        for (int r = 0; r < int(pi0.p0.size()); ++r) {
            Preproj::Vec e(d, 0);
            for (int k : l.proj_basis(pi0.p0[r] - 1, v)) e[k] = fneg(x(pos++, 0));
            h0[r][g] = std::move(e);
        }
    }

    HiggsObject cone;
    cone.p1 = pi0.p1;
    cone.p1.insert(cone.p1.end(), pi1.p0.begin(), pi1.p0.end());
    cone.p0 = pi0.p0;
    for (int r = 0; r < int(pi0.p0.size()); ++r) {
        std::vector<Preproj::Vec> row = pi0.u[r];
        row.insert(row.end(), h0[r].begin(), h0[r].end());
        cone.u.push_back(std::move(row));
    }
    std::vector<int> iso_cone, zero_cone;
    HiggsObject reduced = strip_split_epi(q, cone, iso_cone, zero_cone);
    out.discarded = std::accumulate(iso_cone.begin(), iso_cone.end(), 0) +
                    std::accumulate(zero_cone.begin(), zero_cone.end(), 0);
    out.image = higgs_sum(q, {reduced, phi_image(q, out.frozen)});
    return out;
}

namespace {

struct ModuleList {
    std::vector<Rep> mods;
    std::mt19937_64 rng{0x1a3b};

    bool add(const Rep& r) {
        if (r.total_dim() == 0) return false;
        for (const auto& m : mods)
            if (m.dims == r.dims && isomorphic(m, r, rng)) return false;
        mods.push_back(r);
        return true;
    }
};

std::vector<Rep> summands(const Rep& m, std::mt19937_64& rng) {
    std::vector<Rep> out;
    if (m.total_dim() == 0) return out;
    for (auto& s : decompose(m, rng)) out.push_back(std::move(s.rep));
    return out;
}

Rep syzygy(const Preproj& l, const Rep& m, std::mt19937_64& rng) {
    auto top = top_dims(m);
    std::vector<int> vs;
    for (int v = 0; v < l.n(); ++v)
        for (int k = 0; k < top[v]; ++k) vs.push_back(v + 1);
    std::vector<Rep> parts;
    for (int v : vs) parts.push_back(l.projective(v - 1));
    SumRep p = direct_sum(parts, l.shape());
    auto basis = hom_basis(p.rep, m);
    for (;;) {
        Morph f = random_combination(basis, p.rep, m, rng);
        if (image(f, p.rep, m).rep.total_dim() == m.total_dim()) return kernel(f, p.rep, m).rep;
    }
}

Rep cosyzygy(const Preproj& l, const Rep& m, std::mt19937_64& rng) {
    auto soc = socle_spaces(m);
    auto perm = l.nakayama_permutation();
    std::vector<Rep> parts;
    for (int v = 0; v < l.n(); ++v)
        for (int k = 0; k < soc[v].cols(); ++k) {
            // socle of e_w L sits at nu(w)
            int w = int(std::find(perm.begin(), perm.end(), v) - perm.begin());
            parts.push_back(l.projective(w));
        }
    SumRep e = direct_sum(parts, l.shape());
    auto basis = hom_basis(m, e.rep);
    for (;;) {
        Morph f = random_combination(basis, m, e.rep, rng);
        if (kernel(f, m, e.rep).rep.total_dim() == 0) return cokernel(f, m, e.rep).rep;
    }
}

}

std::vector<Rep> lambda_indecomposables(const Quiver& q) {
    guard_small_a(q);
    const Preproj& l = Preproj::get(q);
    ModuleList list;
    for (int v = 0; v < q.n(); ++v) list.add(l.projective(v));
    for (std::size_t k = 0; k < list.mods.size(); ++k) {
        Rep m = list.mods[k];
        std::vector<Rep> next;
        auto push = [&](const Rep& r) {
            for (auto& s : summands(r, list.rng)) next.push_back(std::move(s));
        };
        push(subrep(m, radical_spaces(m)).rep);
        push(quotient(m, socle_spaces(m)).rep);
        push(syzygy(l, m, list.rng));
        push(cosyzygy(l, m, list.rng));
        for (const auto& r : next) list.add(r);
    }
    return list.mods;
}

MprLabel omega_action(const Quiver& q, const MprLabel& x) {
    const ZQ& z = ZQ::get(q);
    switch (x.kind) {
    case MprLabel::Kind::Done: return {MprLabel::Kind::Dzero, x.index};
    case MprLabel::Kind::Dzero: return {MprLabel::Kind::Mod, z.label_id({0, x.index})};
    case MprLabel::Kind::Mod:
        for (int i = 1; i <= q.n(); ++i)
            if (z.label_id({0, i}) == x.index) return {MprLabel::Kind::Done, z.star(i)};
        throw std::invalid_argument(x.str() + " is not frozen");
    }
    throw std::invalid_argument("bad label");
}

int omega_order(const Quiver& q) {
    int order = 1;
    for (int i = 1; i <= q.n(); ++i) {
        MprLabel start{MprLabel::Kind::Done, i}, x = omega_action(q, start);
        int len = 1;
        for (; !(x == start); ++len) x = omega_action(q, x);
        order = std::lcm(order, len);
    }
    return order;
}

}
