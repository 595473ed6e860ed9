#include "tricluster/rep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tc {

int Rep::total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
}

Rep zero_rep(const ShapePtr& s) {
    Rep r;
    r.shape = s;
    r.dims.assign(s->n, 0);
    for (std::size_t a = 0; a < s->arrows.size(); ++a) r.maps.emplace_back(0, 0);
    return r;
}

void check_rep(const Rep& r) {
    if (int(r.dims.size()) != r.shape->n || r.maps.size() != r.shape->arrows.size())
        throw std::logic_error("rep: size mismatch");
    for (std::size_t a = 0; a < r.maps.size(); ++a) {
        auto [s, t] = r.shape->arrows[a];
        if (r.maps[a].rows() != r.dims[t] || r.maps[a].cols() != r.dims[s])
            throw std::logic_error("rep: map shape");
    }
}

bool is_morphism(const Morph& f, const Rep& m, const Rep& n) {
    for (std::size_t a = 0; a < m.maps.size(); ++a) {
        auto [s, t] = m.shape->arrows[a];
        if (!(n.maps[a] * f.comps[s] == f.comps[t] * m.maps[a])) return false;
    }
    return true;
}

Morph zero_morph(const Rep& m, const Rep& n) {
    Morph f;
    for (int v = 0; v < m.shape->n; ++v) f.comps.emplace_back(n.dims[v], m.dims[v]);
    return f;
}

Morph identity_morph(const Rep& m) {
    Morph f;
    for (int v = 0; v < m.shape->n; ++v) f.comps.push_back(Matrix::identity(m.dims[v]));
    return f;
}

Morph compose(const Morph& g, const Morph& f) {
    Morph h;
    for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(g.comps[v] * f.comps[v]);
    return h;
}

Morph add(const Morph& f, const Morph& g) {
    Morph h;
    for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(f.comps[v] + g.comps[v]);
    return h;
}

Morph scale(const Morph& f, Fp c) {
    Morph h;
    for (const auto& m : f.comps) h.comps.push_back(m.scaled(c));
    return h;
}

bool is_iso(const Morph& f) {
    for (const auto& m : f.comps)
        if (m.rows() != m.cols() || !invertible(m)) return false;
    return true;
}

std::vector<Morph> hom_basis(const Rep& m, const Rep& n) {
    const Shape& sh = *m.shape;
    std::vector<int> off(sh.n + 1, 0);
    for (int v = 0; v < sh.n; ++v) off[v + 1] = off[v] + n.dims[v] * m.dims[v];
    int vars = off[sh.n];
    std::vector<Morph> out;
    if (vars == 0) return out;
    int eqs = 0;
    for (std::size_t a = 0; a < sh.arrows.size(); ++a) {
        auto [s, t] = sh.arrows[a];
        eqs += n.dims[t] * m.dims[s];
    }
    Matrix sys(eqs, vars);
    int row = 0;
    for (std::size_t a = 0; a < sh.arrows.size(); ++a) {
        auto [s, t] = sh.arrows[a];
        const Matrix& na = n.maps[a];
        const Matrix& ma = m.maps[a];
        for (int i = 0; i < n.dims[t]; ++i)
            for (int j = 0; j < m.dims[s]; ++j, ++row) {
                for (int k = 0; k < n.dims[s]; ++k)
                    sys(row, off[s] + k * m.dims[s] + j) = fadd(sys(row, off[s] + k * m.dims[s] + j), na(i, k));
                for (int k = 0; k < m.dims[t]; ++k)
                    sys(row, off[t] + i * m.dims[t] + k) = fsub(sys(row, off[t] + i * m.dims[t] + k), ma(k, j));
            }
    }
    Matrix ns = nullspace(sys);
    for (int c = 0; c < ns.cols(); ++c) {
        Morph f;
        for (int v = 0; v < sh.n; ++v) {
            Matrix x(n.dims[v], m.dims[v]);
            for (int i = 0; i < n.dims[v]; ++i)
                for (int j = 0; j < m.dims[v]; ++j) x(i, j) = ns(off[v] + i * m.dims[v] + j, c);
            f.comps.push_back(std::move(x));
        }
        out.push_back(std::move(f));
    }
    return out;
}

int hom_dim(const Rep& m, const Rep& n) { return int(hom_basis(m, n).size()); }

Morph random_combination(const std::vector<Morph>& basis, const Rep& m, const Rep& n, std::mt19937_64& rng) {
    Morph f = zero_morph(m, n);
    std::uniform_int_distribution<Fp> dist(0, kPrime - 1);
    for (const auto& b : basis) f = add(f, scale(b, dist(rng)));
    return f;
}

SubRep subrep(const Rep& m, const std::vector<Matrix>& bases) {
    SubRep out;
    out.rep.shape = m.shape;
    for (int v = 0; v < m.shape->n; ++v) out.rep.dims.push_back(bases[v].cols());
    for (std::size_t a = 0; a < m.maps.size(); ++a) {
        auto [s, t] = m.shape->arrows[a];
        Matrix x;
        if (!solve(bases[t], m.maps[a] * bases[s], x)) throw std::logic_error("subrep: not stable");
        if (x.rows() != bases[t].cols()) x = Matrix(bases[t].cols(), bases[s].cols());
        out.rep.maps.push_back(std::move(x));
    }
    out.incl.comps = bases;
    return out;
}

QuotRep quotient(const Rep& m, const std::vector<Matrix>& bases) {
    QuotRep out;
    out.rep.shape = m.shape;
    std::vector<Matrix> lift;
    for (int v = 0; v < m.shape->n; ++v) {
        int d = m.dims[v];
        Matrix c = complement_basis(bases[v], d);
        Matrix full = hstack(bases[v], c);
        Matrix p = d ? inverse(full).block(bases[v].cols(), 0, c.cols(), d) : Matrix(0, 0);
        out.rep.dims.push_back(c.cols());
        out.proj.comps.push_back(p);
        lift.push_back(c);
    }
    for (std::size_t a = 0; a < m.maps.size(); ++a) {
        auto [s, t] = m.shape->arrows[a];
        out.rep.maps.push_back(out.proj.comps[t] * m.maps[a] * lift[s]);
    }
    return out;
}

SubRep kernel(const Morph& f, const Rep& m, const Rep&) {
    std::vector<Matrix> b;
    for (int v = 0; v < m.shape->n; ++v) {
        if (f.comps[v].rows() == 0) b.push_back(Matrix::identity(m.dims[v]));
        else b.push_back(nullspace(f.comps[v]));
    }
    return subrep(m, b);
}

SubRep image(const Morph& f, const Rep& m, const Rep& n) {
    std::vector<Matrix> b;
    for (int v = 0; v < m.shape->n; ++v) {
        if (f.comps[v].cols() == 0) b.emplace_back(n.dims[v], 0);
        else b.push_back(column_basis(f.comps[v]));
    }
    return subrep(n, b);
}

QuotRep cokernel(const Morph& f, const Rep& m, const Rep& n) {
    return quotient(n, image(f, m, n).incl.comps);
}

SumRep direct_sum(const std::vector<Rep>& parts, const ShapePtr& s) {
    SumRep out;
    out.rep.shape = s;
    out.rep.dims.assign(s->n, 0);
    for (const auto& p : parts)
        for (int v = 0; v < s->n; ++v) out.rep.dims[v] += p.dims[v];
    for (std::size_t a = 0; a < s->arrows.size(); ++a) {
        auto [src, dst] = s->arrows[a];
        Matrix m(out.rep.dims[dst], out.rep.dims[src]);
        int r = 0, c = 0;
        for (const auto& p : parts) {
            m.set_block(r, c, p.maps[a]);
            r += p.dims[dst];
            c += p.dims[src];
        }
        out.rep.maps.push_back(std::move(m));
    }
    std::vector<int> off(s->n, 0);
    for (const auto& p : parts) {
        Morph i, q;
        for (int v = 0; v < s->n; ++v) {
            Matrix e(out.rep.dims[v], p.dims[v]);
            for (int k = 0; k < p.dims[v]; ++k) e(off[v] + k, k) = 1;
            q.comps.push_back(e.transpose());
            i.comps.push_back(std::move(e));
            off[v] += p.dims[v];
        }
        out.inj.push_back(std::move(i));
        out.proj.push_back(std::move(q));
    }
    return out;
}

std::vector<Matrix> radical_spaces(const Rep& m) {
    std::vector<Matrix> span(m.shape->n);
    for (int v = 0; v < m.shape->n; ++v) span[v] = Matrix(m.dims[v], 0);
    for (std::size_t a = 0; a < m.maps.size(); ++a) {
        int t = m.shape->arrows[a].second;
        span[t] = hstack(span[t], m.maps[a]);
    }
    for (auto& s : span) s = s.cols() ? column_basis(s) : s;
    return span;
}

std::vector<int> top_dims(const Rep& m) {
    auto r = radical_spaces(m);
    std::vector<int> out;
    for (int v = 0; v < m.shape->n; ++v) out.push_back(m.dims[v] - r[v].cols());
    return out;
}

std::vector<Matrix> socle_spaces(const Rep& m) {
    std::vector<Matrix> stack(m.shape->n);
    for (int v = 0; v < m.shape->n; ++v) stack[v] = Matrix(0, m.dims[v]);
    for (std::size_t a = 0; a < m.maps.size(); ++a) {
        int s = m.shape->arrows[a].first;
        stack[s] = vstack(stack[s], m.maps[a]);
    }
    std::vector<Matrix> out;
    for (int v = 0; v < m.shape->n; ++v)
        out.push_back(stack[v].rows() ? nullspace(stack[v]) : Matrix::identity(m.dims[v]));
    return out;
}

bool isomorphic(const Rep& a, const Rep& b, std::mt19937_64& rng) {
    if (a.dims != b.dims) return false;
    if (a.total_dim() == 0) return true;
    auto basis = hom_basis(a, b);
    if (basis.empty()) return false;
    for (int t = 0; t < 6; ++t)
        if (is_iso(random_combination(basis, a, b, rng))) return true;
    return false;
}

namespace {

Matrix power(const Matrix& m, int e) {
    Matrix r = Matrix::identity(m.rows());
    for (int i = 0; i < e; ++i) r = r * m;
    return r;
}

bool try_split(const Rep& m, const Morph& phi, std::vector<Matrix>& kb, std::vector<Matrix>& ib) {
    int n = m.shape->n;
    int big = *std::max_element(m.dims.begin(), m.dims.end());
    std::vector<Fp> roots;
    for (int v = 0; v < n; ++v) {
        if (!m.dims[v]) continue;
        for (Fp r : poly_roots(charpoly(phi.comps[v])))
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    for (Fp lam : roots) {
        kb.clear();
        ib.clear();
        int kd = 0, id = 0;
        for (int v = 0; v < n; ++v) {
            Matrix psi = phi.comps[v] - Matrix::identity(m.dims[v]).scaled(lam);
            Matrix pw = power(psi, big);
            if (m.dims[v] == 0) {
                kb.emplace_back(0, 0);
                ib.emplace_back(0, 0);
                continue;
            }
            kb.push_back(nullspace(pw));
            Matrix im = column_basis(pw);
            if (im.cols() == 0) im = Matrix(m.dims[v], 0);
            ib.push_back(im);
            kd += kb.back().cols();
            id += ib.back().cols();
        }
        if (kd && id) return true;
    }
    return false;
}

}

std::vector<SubRep> decompose(const Rep& m, std::mt19937_64& rng) {
    std::vector<SubRep> out;
    if (m.total_dim() == 0) return out;
    auto end = hom_basis(m, m);
    if (end.size() > 1) {
        std::vector<Matrix> kb, ib;
        for (int t = 0; t < 24; ++t) {
            Morph phi = random_combination(end, m, m, rng);
            if (!try_split(m, phi, kb, ib)) continue;
            for (const auto* part : {&kb, &ib}) {
                SubRep s = subrep(m, *part);
                for (auto& piece : decompose(s.rep, rng)) {
                    piece.incl = compose(s.incl, piece.incl);
                    out.push_back(std::move(piece));
                }
            }
            return out;
        }
    }
    out.push_back({m, identity_morph(m)});
    return out;
}

bool is_indecomposable(const Rep& m, std::mt19937_64& rng) {
    return m.total_dim() > 0 && decompose(m, rng).size() == 1;
}

std::vector<Fp> act_word(const Rep& m, const std::vector<int>& word, std::vector<Fp> x) {
    for (int a : word) x = m.maps[a].apply(x);
    return x;
}

Morph from_generator(const PathProjective& p, const Rep& m, const std::vector<Fp>& x) {
    Morph f;
    for (int w = 0; w < m.shape->n; ++w) {
        Matrix c(m.dims[w], p.rep.dims[w]);
        for (int k = 0; k < p.rep.dims[w]; ++k) {
            auto y = act_word(m, p.paths[w][k], x);
            for (int i = 0; i < m.dims[w]; ++i) c(i, k) = y[i];
        }
        f.comps.push_back(std::move(c));
    }
    return f;
}

PathProjective path_projective(const ShapePtr& s, int v) {
    PathProjective p;
    p.vertex = v;
    p.paths.assign(s->n, {});
    std::vector<std::pair<int, std::vector<int>>> stack{{v, {}}};
    while (!stack.empty()) {
        auto [w, word] = stack.back();
        stack.pop_back();
        if (word.size() > 64) throw std::logic_error("path_projective: cyclic shape");
        p.paths[w].push_back(word);
        for (std::size_t a = 0; a < s->arrows.size(); ++a)
            if (s->arrows[a].first == w) {
                auto next = word;
                next.push_back(int(a));
                stack.push_back({s->arrows[a].second, next});
            }
    }
    for (auto& ps : p.paths) std::sort(ps.begin(), ps.end());
    p.rep.shape = s;
    for (int w = 0; w < s->n; ++w) p.rep.dims.push_back(int(p.paths[w].size()));
    for (std::size_t a = 0; a < s->arrows.size(); ++a) {
        auto [src, dst] = s->arrows[a];
        Matrix m(p.rep.dims[dst], p.rep.dims[src]);
        for (int k = 0; k < p.rep.dims[src]; ++k) {
            auto w = p.paths[src][k];
            w.push_back(int(a));
            auto it = std::lower_bound(p.paths[dst].begin(), p.paths[dst].end(), w);
            m(int(it - p.paths[dst].begin()), k) = 1;
        }
        p.rep.maps.push_back(std::move(m));
    }
    return p;
}

}
