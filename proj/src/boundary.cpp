#include "tricluster/boundary.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tc {

namespace {

void check_side(int s) {
    if (s < -1 || s > 1) throw std::invalid_argument("side must be -1, 0 or 1");
}

GradedDim pi2_sum(const Quiver& q, const std::vector<StalkObject>& x, const std::vector<ZVertex>& y, int floor) {
    const ZQ& z = ZQ::get(q);
    GradedDim g;
    g.floor = floor;
    for (const auto& a : x)
        for (ZVertex b : y) g += z.pi2_hom(z.vertex_of(a.label, a.shift), b, floor);
    return g;
}

std::vector<ZVertex> vertices(const Quiver& q, const std::vector<StalkObject>& y) {
    const ZQ& z = ZQ::get(q);
    std::vector<ZVertex> out;
    for (const auto& s : y) out.push_back(z.vertex_of(s.label, s.shift));
    return out;
}

GradedDim twisted(const GradedDim& g) { return g.shifted(-1).truncated_le0(); }

}

GradedDim thm1_hom(const Quiver& q, int i, const std::vector<StalkObject>& x, int j,
                   const std::vector<StalkObject>& y, int floor) {
    check_side(i);
    check_side(j);
    if (i == 1 && j == -1) return twisted(pi2_sum(q, x, vertices(q, y), floor - 1));
    if (j == i || j == i + 1) return pi2_sum(q, x, vertices(q, y), floor);
    GradedDim zero;
    zero.floor = floor;
    return zero;
}

GradedDim thm2_hom(const Quiver& q, int i, const std::vector<StalkObject>& x, const MprLabel& y, int floor) {
    check_side(i);
    const ZQ& z = ZQ::get(q);
    MprObject obj = mpr_object(q, y);
    std::vector<ZVertex> target;
    if (i == 1) {
        target = vertices(q, cone(q, y));
        return twisted(pi2_sum(q, x, target, floor - 1));
    }
    for (int v : functor_C(i == -1 ? 0 : 1, obj)) target.push_back({0, v});
    (void)z;
    return pi2_sum(q, x, target, floor);
}

namespace {

// matrix of mesh-category morphisms, e[j][i] : src[i] -> dst[j]
struct MatMor {
    std::vector<ZVertex> src;
    std::vector<ZVertex> dst;
    std::vector<std::vector<ZMor>> e;
};

MatMor zero_mat(const ZQ& z, const std::vector<ZVertex>& src, const std::vector<ZVertex>& dst) {
    MatMor m{src, dst, {}};
    for (ZVertex d : dst) {
        std::vector<ZMor> row;
        for (ZVertex s : src) row.push_back(z.zero(s, d));
        m.e.push_back(std::move(row));
    }
    return m;
}

MatMor compose_mat(const ZQ& z, const MatMor& g, const MatMor& f) {
    MatMor out = zero_mat(z, f.src, g.dst);
    for (std::size_t k = 0; k < g.dst.size(); ++k)
        for (std::size_t i = 0; i < f.src.size(); ++i)
            for (std::size_t j = 0; j < f.dst.size(); ++j)
                if (!g.e[k][j].c.empty() && !f.e[j][i].c.empty())
                    out.e[k][i] = z.add(out.e[k][i], z.compose(g.e[k][j], f.e[j][i]));
    return out;
}

MatMor map_mat(const MatMor& f, const std::function<ZMor(const ZMor&)>& fn,
               const std::function<ZVertex(ZVertex)>& vf) {
    MatMor out = f;
    for (auto& v : out.src) v = vf(v);
    for (auto& v : out.dst) v = vf(v);
    for (auto& row : out.e)
        for (auto& x : row) x = fn(x);
    return out;
}

MatMor suspend_mat(const ZQ& z, const MatMor& f, int k) {
    return map_mat(f, [&](const ZMor& x) { return z.suspend(x, k); }, [&](ZVertex v) { return z.sigma(v, k); });
}

MatMor translate_mat(const ZQ& z, const MatMor& f, int p) {
    return map_mat(f, [&](const ZMor& x) { return z.translate(x, p); }, [&](ZVertex v) { return z.tau(v, -p); });
}

std::vector<Fp> flat(const MatMor& f) {
    std::vector<Fp> v;
    for (const auto& row : f.e)
        for (const auto& x : row) v.insert(v.end(), x.c.begin(), x.c.end());
    return v;
}

int hom_size(const ZQ& z, const std::vector<ZVertex>& src, const std::vector<ZVertex>& dst) {
    int s = 0;
    for (ZVertex d : dst)
        for (ZVertex a : src) s += z.hom_dim(a, d);
    return s;
}

MatMor from_flat(const ZQ& z, const std::vector<ZVertex>& src, const std::vector<ZVertex>& dst,
                 const std::vector<Fp>& v, std::size_t at = 0) {
    MatMor m = zero_mat(z, src, dst);
    for (auto& row : m.e)
        for (auto& x : row)
            for (auto& c : x.c) c = v[at++];
    return m;
}

std::vector<ZVertex> sigma_all(const ZQ& z, std::vector<ZVertex> v, int k) {
    for (auto& x : v) x = z.sigma(x, k);
    return v;
}

// u : u1 -> u0
struct Two {
    std::vector<ZVertex> u1;
    std::vector<ZVertex> u0;
    MatMor u;
};

std::vector<ZVertex> q_path(const Quiver& q, int a, int b) {
    std::vector<int> prev(q.n() + 1, 0);
    std::vector<int> stack{a};
    prev[a] = a;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [s, t] : q.arrows)
            if (s == v && !prev[t]) {
                prev[t] = v;
                stack.push_back(t);
            }
    }
    if (!prev[b]) throw std::logic_error("no path in Q");
    std::vector<ZVertex> p;
    for (int v = b; v != a; v = prev[v]) p.push_back({0, v});
    p.push_back({0, a});
    std::reverse(p.begin(), p.end());
    return p;
}

Two resolve(const Quiver& q, const MprLabel& l) {
    const ZQ& z = ZQ::get(q);
    MprObject obj = mpr_object(q, l);
    Two t;
    for (int v : obj.p1) t.u1.push_back({0, v});
    for (int v : obj.p0) t.u0.push_back({0, v});
    t.u = zero_mat(z, t.u1, t.u0);
    for (std::size_t r = 0; r < obj.p0.size(); ++r)
        for (std::size_t s = 0; s < obj.p1.size(); ++s)
            if (Fp c = obj.coeff(int(r), int(s)))
                t.u.e[r][s] = z.scale(z.path(q_path(q, obj.p1[s], obj.p0[r])), c);
    return t;
}

Two translate_two(const ZQ& z, const Two& t, int p) {
    Two out = t;
    for (auto& v : out.u1) v = z.tau(v, -p);
    for (auto& v : out.u0) v = z.tau(v, -p);
    out.u = translate_mat(z, t.u, p);
    return out;
}

// (g0, g1) |-> g0 u - Sigma^n(v) g1, from Hom(U0, S^n V0) + Hom(U1, S^n V1) to Hom(U1, S^n V0)
Matrix delta(const ZQ& z, const Two& U, const Two& V, int n) {
    auto v0 = sigma_all(z, V.u0, n);
    auto v1 = sigma_all(z, V.u1, n);
    MatMor sv = suspend_mat(z, V.u, n);
    int d0 = hom_size(z, U.u0, v0), d1 = hom_size(z, U.u1, v1), cod = hom_size(z, U.u1, v0);
    Matrix m(cod, d0 + d1);
    std::vector<Fp> unit;
    for (int k = 0; k < d0 + d1; ++k) {
        std::vector<Fp> col;
        if (k < d0) {
            unit.assign(d0, 0);
            unit[k] = 1;
            col = flat(compose_mat(z, from_flat(z, U.u0, v0, unit), U.u));
        } else {
            unit.assign(d1, 0);
            unit[k - d0] = 1;
            col = flat(compose_mat(z, sv, from_flat(z, U.u1, v1, unit)));
            for (auto& c : col) c = fneg(c);
        }
        for (int r = 0; r < cod; ++r) m(r, k) = col[r];
    }
    return m;
}

bool beyond(const ZQ& z, const Two& V, int floor) {
    for (const auto* list : {&V.u0, &V.u1})
        for (ZVertex v : *list)
            if (z.sigma(v, floor - 1).m <= z.h() + 1) return false;
    return true;
}

GradedDim rhom_two(const ZQ& z, const Two& U, const Two& V, int floor) {
    GradedDim g;
    g.floor = floor;
    int top = 3;
    std::vector<int> dom, cod, rk;
    for (int n = floor - 1; n <= top; ++n) {
        Matrix d = delta(z, U, V, n);
        dom.push_back(d.cols());
        cod.push_back(d.rows());
        rk.push_back(d.rows() && d.cols() ? rank(d) : 0);
    }
    for (int n = floor; n <= top; ++n) {
        int k = n - floor + 1;
        g.add(n, dom[k] - rk[k] + cod[k - 1] - rk[k - 1]);
    }
    return g;
}

}

GradedDim gamma_hom(const Quiver& q, const MprLabel& x, const MprLabel& y, int floor, int pmax) {
    const ZQ& z = ZQ::get(q);
    Two U = resolve(q, x), V = resolve(q, y);
    GradedDim g;
    g.floor = floor;
    for (int p = 0;; ++p) {
        Two Vp = translate_two(z, V, p);
        if (pmax >= 0 ? p > pmax : beyond(z, Vp, floor)) break;
        g += rhom_two(z, U, Vp, floor);
    }
    return g.truncated_le0();
}

GammaHomTable hom_table(const Quiver& q, int floor) {
    GammaHomTable t;
    t.labels = mpr_indecomposables(q);
    t.floor = floor;
    for (const auto& a : t.labels) {
        std::vector<GradedDim> row;
        for (const auto& b : t.labels) row.push_back(gamma_hom(q, a, b, floor));
        t.cells.push_back(std::move(row));
    }
    return t;
}

namespace {

// degree-0 morphism RX -> tau^{-p} RY: (g0, g1, h) with h of degree -1
struct Elem {
    int p = 0;
    MatMor g0, g1, h;
};

struct Cell {
    std::vector<Elem> rad;
    std::vector<Matrix> im;  // per p: image of delta_{-1}, embedded in element coordinates
    std::vector<int> hdim;   // per p: dim H^0
};

std::vector<Fp> coords(const Elem& e) {
    auto v = flat(e.g0);
    auto a = flat(e.g1), b = flat(e.h);
    v.insert(v.end(), a.begin(), a.end());
    v.insert(v.end(), b.begin(), b.end());
    return v;
}

Elem compose_elem(const ZQ& z, const Elem& b, const Elem& a) {
    Elem out;
    out.p = a.p + b.p;
    MatMor g0 = translate_mat(z, b.g0, a.p), g1 = translate_mat(z, b.g1, a.p), h = translate_mat(z, b.h, a.p);
    out.g0 = compose_mat(z, g0, a.g0);
    out.g1 = compose_mat(z, g1, a.g1);
    MatMor t1 = compose_mat(z, suspend_mat(z, g0, -1), a.h);
    MatMor t2 = compose_mat(z, h, a.g1);
    out.h = t1;
    for (std::size_t r = 0; r < t1.e.size(); ++r)
        for (std::size_t c = 0; c < t1.e[r].size(); ++c) out.h.e[r][c] = z.add(t1.e[r][c], t2.e[r][c]);
    return out;
}

}

std::map<std::pair<int, int>, int> degree0_arrows(const Quiver& q) {
    const ZQ& z = ZQ::get(q);
    auto labels = mpr_indecomposables(q);
    int n = int(labels.size());
    std::vector<Two> R;
    for (const auto& l : labels) R.push_back(resolve(q, l));
    std::vector<std::vector<Cell>> cells(n, std::vector<Cell>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Cell& c = cells[x][y];
            const Two& U = R[x];
            for (int p = 0;; ++p) {
                Two V = translate_two(z, R[y], p);
                if (beyond(z, V, 0)) break;
                Matrix d0 = delta(z, U, V, 0), dm = delta(z, U, V, -1);
                int s00 = hom_size(z, U.u0, V.u0), s11 = hom_size(z, U.u1, V.u1);
                auto vm0 = sigma_all(z, V.u0, -1);
                int sh = hom_size(z, U.u1, vm0);
                Matrix ker = d0.rows() ? nullspace(d0) : Matrix::identity(s00 + s11);
                Matrix img = dm.cols() && dm.rows() ? column_basis(dm) : Matrix(sh, 0);
                Matrix comp = complement_basis(img, sh);
                Matrix emb(s00 + s11 + sh, img.cols());
                emb.set_block(s00 + s11, 0, img);
                c.im.push_back(emb);
                c.hdim.push_back(ker.cols() + comp.cols());
                std::vector<Elem> basis;
                for (int k = 0; k < ker.cols(); ++k) {
                    std::vector<Fp> v(s00 + s11);
                    for (int r = 0; r < s00 + s11; ++r) v[r] = ker(r, k);
                    Elem e{p, from_flat(z, U.u0, V.u0, v), from_flat(z, U.u1, V.u1, v, s00), zero_mat(z, U.u1, vm0)};
                    basis.push_back(std::move(e));
                }
                for (int k = 0; k < comp.cols(); ++k) {
                    std::vector<Fp> v(sh);
                    for (int r = 0; r < sh; ++r) v[r] = comp(r, k);
                    basis.push_back({p, zero_mat(z, U.u0, V.u0), zero_mat(z, U.u1, V.u1), from_flat(z, U.u1, vm0, v)});
                }
                if (x == y && p == 0) {
                    if (ker.cols() != 1) throw std::logic_error("degree0_arrows: endomorphism ring is not local-split");
                    basis.erase(basis.begin());
                }
                for (auto& e : basis) c.rad.push_back(std::move(e));
            }
        }
    std::map<std::pair<int, int>, int> arrows;
    for (int x = 0; x < n; ++x)
        for (int w = 0; w < n; ++w) {
            std::map<int, std::vector<std::vector<Fp>>> prods;
            for (int y = 0; y < n; ++y)
                for (const Elem& a : cells[x][y].rad)
                    for (const Elem& b : cells[y][w].rad) {
                        if (a.p + b.p >= int(cells[x][w].hdim.size())) continue;
                        prods[a.p + b.p].push_back(coords(compose_elem(z, b, a)));
                    }
            int rad = int(cells[x][w].rad.size());
            int rad2 = 0;
            for (auto& [p, vs] : prods) {
                const Matrix& im = cells[x][w].im[p];
                Matrix m(im.rows(), int(vs.size()));
                for (std::size_t k = 0; k < vs.size(); ++k)
                    for (int r = 0; r < im.rows(); ++r) m(r, int(k)) = vs[k][r];
                rad2 += rank(hstack(m, im)) - im.cols();
            }
            if (rad - rad2 > 0) arrows[{x + 1, w + 1}] = rad - rad2;
        }
    return arrows;
}

}
