#include "tricluster/preproj.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace tc {

const Preproj& Preproj::get(const Quiver& q) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<Preproj>> cache;
    std::string key = quiver_to_text(q);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[key];
    if (!slot) slot = std::make_unique<Preproj>(q);
    return *slot;
}

Preproj::Preproj(const Quiver& q) : q_(q) {
    const int n = q.n();
    const int m = int(q.arrows.size());
    for (auto [s, t] : q.arrows) arrows_.push_back({s - 1, t - 1});
    for (auto [s, t] : q.arrows) arrows_.push_back({t - 1, s - 1});
    const int na = 2 * m;

    deg_off_.push_back(0);
    for (int v = 0; v < n; ++v) basis_.push_back({0, v, v, {}});
    deg_off_.push_back(n);
    red_.push_back({});

    for (int d = 1;; ++d) {
        const int lo = deg_off_[d - 1], hi = deg_off_[d];
        std::vector<std::pair<int, int>> cand;
        for (int k = lo; k < hi; ++k) {
            next_.push_back(std::vector<int>(na, -1));
            for (int a = 0; a < na; ++a)
                if (arrows_[a].first == basis_[k].dst) {
                    next_[k][a] = int(cand.size());
                    cand.push_back({k, a});
                }
        }
        const int nc = int(cand.size());
        std::vector<std::vector<Fp>> rels;
        if (d >= 2) {
            for (int c = deg_off_[d - 2]; c < deg_off_[d - 1]; ++c) {
                int v = basis_[c].dst;
                std::vector<Fp> rel(nc, 0);
                auto push = [&](int first, int second, Fp sign) {
                    if (next_[c][first] < 0) return;
                    const auto& mid = red_[d - 1][next_[c][first]];
                    for (int j = 0; j < int(mid.size()); ++j) {
                        if (!mid[j]) continue;
                        int idx = next_[lo + j][second];
                        if (idx >= 0) rel[idx] = fadd(rel[idx], fmul(sign, mid[j]));
                    }
                };
                for (int a = 0; a < m; ++a) {
                    if (arrows_[a].first == v) push(a, a + m, 1);
                    if (arrows_[a].second == v) push(a + m, a, fneg(1));
                }
                rels.push_back(std::move(rel));
            }
        }
        Matrix r(int(rels.size()), nc);
        for (int i = 0; i < int(rels.size()); ++i)
            for (int j = 0; j < nc; ++j) r(i, j) = rels[i][j];
        Echelon e = rref(r);
        std::vector<int> local(nc, -1);
        std::vector<bool> piv(nc, false);
        for (int p : e.pivots) piv[p] = true;
        int cnt = 0;
        for (int j = 0; j < nc; ++j)
            if (!piv[j]) {
                local[j] = cnt++;
                auto [k, a] = cand[j];
                Basis b{d, basis_[k].src, arrows_[a].second, basis_[k].word};
                b.word.push_back(a);
                basis_.push_back(std::move(b));
            }
        std::vector<std::vector<Fp>> red(nc, std::vector<Fp>(cnt, 0));
        for (int j = 0; j < nc; ++j)
            if (!piv[j]) red[j][local[j]] = 1;
        for (int row = 0; row < int(e.pivots.size()); ++row) {
            int p = e.pivots[row];
            for (int j = 0; j < nc; ++j)
                if (!piv[j] && e.r(row, j)) red[p][local[j]] = fneg(e.r(row, j));
        }
        red_.push_back(std::move(red));
        deg_off_.push_back(int(basis_.size()));
        if (cnt == 0) break;
    }

    auto s = std::make_shared<Shape>();
    s->n = n;
    s->arrows = arrows_;
    shape_ = s;
    proj_idx_.assign(n, std::vector<std::vector<int>>(n));
    for (int k = 0; k < dim(); ++k) proj_idx_[basis_[k].src][basis_[k].dst].push_back(k);
    for (int v = 0; v < n; ++v) {
        Rep r;
        r.shape = shape_;
        for (int w = 0; w < n; ++w) r.dims.push_back(int(proj_idx_[v][w].size()));
        for (int a = 0; a < na; ++a) {
            auto [src, dst] = arrows_[a];
            Matrix mat(r.dims[dst], r.dims[src]);
            std::vector<int> pos(dim(), -1);
            for (int i = 0; i < r.dims[dst]; ++i) pos[proj_idx_[v][dst][i]] = i;
            for (int j = 0; j < r.dims[src]; ++j) {
                Vec y = mul_arrow(unit(proj_idx_[v][src][j]), a);
                for (int k = 0; k < dim(); ++k)
                    if (y[k]) mat(pos[k], j) = y[k];
            }
            r.maps.push_back(std::move(mat));
        }
        proj_.push_back(std::move(r));
    }
}

std::string Preproj::word_name(int k) const {
    const auto& b = basis_[k];
    if (b.word.empty()) return "e" + std::to_string(b.src + 1);
    const int m = int(q_.arrows.size());
    std::string s;
    for (int a : b.word) {
        if (!s.empty()) s += ' ';
        s += "a" + std::to_string(a % m + 1) + (a >= m ? "*" : "");
    }
    return s;
}

std::vector<int> Preproj::basis_between(int src, int dst) const { return proj_idx_[src][dst]; }

Preproj::Vec Preproj::unit(int k) const {
    Vec v(dim(), 0);
    v[k] = 1;
    return v;
}

Preproj::Vec Preproj::vertex(int v) const { return unit(v); }

Preproj::Vec Preproj::mul_arrow(const Vec& x, int a) const {
    Vec y(dim(), 0);
    for (int k = 0; k < dim(); ++k) {
        if (!x[k] || basis_[k].dst != arrows_[a].first) continue;
        int d = basis_[k].degree;
        if (k >= int(next_.size())) continue;
        int c = next_[k][a];
        const auto& r = red_[d + 1][c];
        for (int j = 0; j < int(r.size()); ++j)
            if (r[j]) y[deg_off_[d + 1] + j] = fadd(y[deg_off_[d + 1] + j], fmul(x[k], r[j]));
    }
    return y;
}

Preproj::Vec Preproj::mul(const Vec& x, const Vec& y) const {
    Vec out(dim(), 0);
    for (int k = 0; k < dim(); ++k) {
        if (!y[k]) continue;
        const auto& b = basis_[k];
        Vec z(dim(), 0);
        for (int j = 0; j < dim(); ++j)
            if (x[j] && basis_[j].dst == b.src) z[j] = x[j];
        for (int a : b.word) z = mul_arrow(z, a);
        for (int j = 0; j < dim(); ++j)
            if (z[j]) out[j] = fadd(out[j], fmul(y[k], z[j]));
    }
    return out;
}

Preproj::Vec Preproj::from_q_path(const std::vector<int>& path) const {
    const int m = int(q_.arrows.size());
    if (path.empty()) throw std::invalid_argument("empty path");
    Vec x = vertex(arrows_[path.back()].second);
    for (auto it = path.rbegin(); it != path.rend(); ++it) x = mul_arrow(x, *it + m);
    return x;
}

Preproj::Vec Preproj::q_path_between(int a, int b) const {
    if (a == b) return vertex(a);
    const int m = int(q_.arrows.size());
    std::vector<int> path;
    std::function<bool(int)> dfs = [&](int v) {
        if (v == b) return true;
        for (int e = 0; e < m; ++e)
            if (arrows_[e].first == v) {
                path.push_back(e);
                if (dfs(arrows_[e].second)) return true;
                path.pop_back();
            }
        return false;
    };
    if (!dfs(a)) return Vec(dim(), 0);
    return from_q_path(path);
}

const Matrix& Preproj::nakayama_matrix() const {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (nu_ready_) return nu_;
    const int d = dim();
    const int top = deg_off_[top_degree()];
    Matrix g(d, d);
    for (int i = 0; i < d; ++i) {
        Vec ui = unit(i);
        for (int j = 0; j < d; ++j) {
            if (basis_[i].degree + basis_[j].degree != top_degree() || basis_[i].dst != basis_[j].src) continue;
            Vec p = mul(ui, unit(j));
            Fp s = 0;
            for (int k = top; k < d; ++k) s = fadd(s, p[k]);
            g(i, j) = s;
        }
    }
    nu_ = inverse(g) * g.transpose();
    nu_ready_ = true;
    return nu_;
}

Preproj::Vec Preproj::nu(const Vec& x) const { return nakayama_matrix().apply(x); }

std::vector<int> Preproj::nakayama_permutation() const {
    std::vector<int> perm(n(), -1);
    for (int v = 0; v < n(); ++v) {
        Vec y = nu(vertex(v));
        for (int w = 0; w < n(); ++w)
            if (y == vertex(w)) perm[v] = w;
        if (perm[v] < 0) throw std::logic_error("nakayama automorphism does not permute the vertices");
    }
    return perm;
}

Morph Preproj::from_generator(int a, const Rep& m, const std::vector<Fp>& x) const {
    Morph f;
    for (int w = 0; w < n(); ++w) {
        const auto& idx = proj_idx_[a][w];
        Matrix c(m.dims[w], int(idx.size()));
        for (int j = 0; j < int(idx.size()); ++j) {
            auto y = act_word(m, basis_[idx[j]].word, x);
            for (int i = 0; i < m.dims[w]; ++i) c(i, j) = y[i];
        }
        f.comps.push_back(std::move(c));
    }
    return f;
}

Morph Preproj::left_mult(int a, int b, const Vec& x) const {
    const auto& idx = proj_idx_[b][a];
    std::vector<Fp> coords(idx.size());
    for (int i = 0; i < int(idx.size()); ++i) coords[i] = x[idx[i]];
    return from_generator(a, proj_[b], coords);
}

}
