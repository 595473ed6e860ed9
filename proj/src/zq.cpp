#include "tricluster/zq.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace tc {

bool ZMor::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](Fp x) { return x == 0; });
}

const ZQ& ZQ::get(const Quiver& q) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<ZQ>> cache;
    std::string key = quiver_to_text(q);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[key];
    if (!slot) slot = std::make_unique<ZQ>(q);
    return *slot;
}

ZQ::ZQ(const Quiver& q) : q_(q) {
    int n = q.n();
    h_ = coxeter_number(q.type);
    span_ = h_ + 1;
    in_arrows_.assign(n, {});
    out_arrows_.assign(n, {});
    std::vector<int> indeg(n, 0);
    for (auto [s, t] : q.arrows) {
        out_arrows_[s - 1].push_back(t);
        in_arrows_[t - 1].push_back(s);
        ++indeg[t - 1];
    }
    std::vector<int> ready;
    for (int i = n; i >= 1; --i)
        if (!indeg[i - 1]) ready.push_back(i);
    while (!ready.empty()) {
        int i = ready.back();
        ready.pop_back();
        order_.push_back(i);
        std::vector<int> next;
        for (int j : out_arrows_[i - 1])
            if (--indeg[j - 1] == 0) next.push_back(j);
        std::sort(next.rbegin(), next.rend());
        ready.insert(ready.end(), next.begin(), next.end());
        std::sort(ready.rbegin(), ready.rend());
    }
    knit_classes();
    for (int m = 0; m <= h_; ++m)
        for (int i = 1; i <= n; ++i)
            if (m < e(i)) labels_.push_back({m, i});
    std::sort(labels_.begin(), labels_.end());
    check_sigma();
    for (int i = 1; i <= n; ++i) knit_table(i);
}

void ZQ::knit_classes() {
    int n = q_.n();
    // dim P_j at w = number of paths w -> j
    std::vector<std::vector<long>> proj(n, std::vector<long>(n, 0));
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
        int w = *it;
        for (int j = 1; j <= n; ++j) {
            long c = (w == j);
            for (int t : out_arrows_[w - 1]) c += proj[j - 1][t - 1];
            proj[j - 1][w - 1] = c;
        }
    }
    cls_.assign(span_ + 1, std::vector<std::vector<long>>(n));
    for (int m = 0; m <= span_; ++m)
        for (int i : order_) {
            std::vector<long> c(n, 0);
            if (m == 0) {
                c = proj[i - 1];
            } else {
                for (ZVertex y : preds({m, i}))
                    for (int w = 0; w < n; ++w) c[w] += cls_[y.m][y.i - 1][w];
                for (int w = 0; w < n; ++w) c[w] -= cls_[m - 1][i - 1][w];
            }
            cls_[m][i - 1] = c;
        }
    e_.assign(n, -1);
    star_.assign(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int m = 1; m <= span_ && e_[i - 1] < 0; ++m) {
            const auto& c = cls_[m][i - 1];
            if (std::any_of(c.begin(), c.end(), [](long x) { return x < 0; })) {
                e_[i - 1] = m;
                for (int k = 1; k <= n; ++k) {
                    bool match = true;
                    for (int w = 0; w < n; ++w) match = match && c[w] == -proj[k - 1][w];
                    if (match) star_[i - 1] = k;
                }
            }
        }
    for (int i = 1; i <= n; ++i)
        if (e_[i - 1] < 0 || star_[i - 1] == 0 || e(i) + e(star(i)) != h_)
            throw std::logic_error("ZQ: inconsistent Nakayama data for " + q_.type.name());
}

std::vector<ZVertex> ZQ::preds(ZVertex v) const {
    std::vector<ZVertex> out;
    for (int k : in_arrows_[v.i - 1]) out.push_back({v.m, k});
    for (int j : out_arrows_[v.i - 1]) out.push_back({v.m - 1, j});
    return out;
}

std::vector<ZVertex> ZQ::succs(ZVertex v) const {
    std::vector<ZVertex> out;
    for (int j : out_arrows_[v.i - 1]) out.push_back({v.m, j});
    for (int k : in_arrows_[v.i - 1]) out.push_back({v.m + 1, k});
    return out;
}

bool ZQ::adjacent(ZVertex a, ZVertex b) const {
    auto s = succs(a);
    return std::find(s.begin(), s.end(), b) != s.end();
}

ZVertex ZQ::sigma(ZVertex v, int k) const {
    for (; k > 0; --k) v = {v.m + e(star(v.i)), star(v.i)};
    for (; k < 0; ++k) v = {v.m - e(v.i), star(v.i)};
    return v;
}

void ZQ::check_sigma() const {
    for (auto [i, j] : q_.arrows)
        for (auto [a, b] : {std::pair<ZVertex, ZVertex>{{0, i}, {0, j}}, {{0, j}, {1, i}}})
            if (!adjacent(sigma(a), sigma(b)))
                throw std::logic_error("ZQ: suspension does not preserve arrows");
}

std::pair<int, int> ZQ::stalk_of(ZVertex v) const {
    int shift = 0;
    while (v.m < 0) {
        v = sigma(v);
        --shift;
    }
    while (v.m >= e(v.i)) {
        v = sigma(v, -1);
        ++shift;
    }
    return {label_id(v), shift};
}

int ZQ::label_id(ZVertex v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    return it != labels_.end() && *it == v ? int(it - labels_.begin()) + 1 : 0;
}

std::vector<int> ZQ::dim_vector(int id) const {
    ZVertex v = label_vertex(id);
    const auto& c = cls_[v.m][v.i - 1];
    return std::vector<int>(c.begin(), c.end());
}

std::vector<long> ZQ::cls(ZVertex v) const {
    auto [id, shift] = stalk_of(v);
    ZVertex b = label_vertex(id);
    auto c = cls_[b.m][b.i - 1];
    if (shift % 2) for (auto& x : c) x = -x;
    return c;
}

void ZQ::knit_table(int i) {
    Table t;
    t.cells.assign(span_ + 1, std::vector<Cell>(q_.n()));
    for (int m = 0; m <= span_; ++m)
        for (int j : order_) {
            ZVertex z{m, j};
            Cell& c = t.cells[m][j - 1];
            std::vector<ZVertex> ys;
            std::vector<int> off{0};
            for (ZVertex y : preds(z))
                if (y.m >= 0) {
                    ys.push_back(y);
                    off.push_back(off.back() + t.cells[y.m][y.i - 1].dim);
                }
            int w = off.back();
            if (m == 0 && j == i) {
                c.dim = 1;
                c.paths = {{z}};
                for (std::size_t k = 0; k < ys.size(); ++k) c.in.push_back({ys[k], Matrix(1, off[k + 1] - off[k])});
                continue;
            }
            if (w == 0) {
                for (ZVertex y : ys) c.in.push_back({y, Matrix(0, 0)});
                continue;
            }
            Matrix img(w, 0);
            if (m >= 1) {
                const Cell& tz = t.cells[m - 1][j - 1];
                img = Matrix(w, tz.dim);
                for (std::size_t k = 0; k < ys.size(); ++k) {
                    const Cell& cy = t.cells[ys[k].m][ys[k].i - 1];
                    for (const auto& [src, a] : cy.in)
                        if (src == ZVertex{m - 1, j}) img.set_block(off[k], 0, a);
                }
                img = column_basis(img);
            }
            Matrix comp = complement_basis(img, w);
            Matrix proj = inverse(hstack(img, comp)).block(img.cols(), 0, comp.cols(), w);
            c.dim = comp.cols();
            for (int b = 0; b < c.dim; ++b) {
                int r = 0;
                while (comp(r, b) == 0) ++r;
                std::size_t k = std::upper_bound(off.begin(), off.end(), r) - off.begin() - 1;
                auto p = t.cells[ys[k].m][ys[k].i - 1].paths[r - off[k]];
                p.push_back(z);
                c.paths.push_back(std::move(p));
            }
            for (std::size_t k = 0; k < ys.size(); ++k)
                c.in.push_back({ys[k], proj.block(0, off[k], c.dim, off[k + 1] - off[k])});
        }
    for (int m = h_; m <= span_; ++m)
        for (int j = 1; j <= q_.n(); ++j)
            if (t.cells[m][j - 1].dim)
                throw std::logic_error("ZQ: hammock exceeds the knitted range");
    tables_.push_back(std::move(t));
}

const ZQ::Cell* ZQ::cell(ZVertex x, ZVertex y) const {
    int rel = y.m - x.m;
    if (rel < 0 || rel > span_) return nullptr;
    return &tables_[x.i - 1].cells[rel][y.i - 1];
}

const Matrix& ZQ::arrow_matrix(ZVertex x, ZVertex a, ZVertex b) const {
    const Cell* c = cell(x, b);
    ZVertex rel{a.m - x.m, a.i};
    for (const auto& [src, m] : c->in)
        if (src == rel) return m;
    throw std::logic_error("ZQ: not an arrow");
}

int ZQ::hom_dim(ZVertex x, ZVertex y) const {
    const Cell* c = cell(x, y);
    return c ? c->dim : 0;
}

GradedDim ZQ::derived_hom(ZVertex x, ZVertex y) const {
    GradedDim g;
    int d = 0;
    while (y.m > x.m) {
        y = sigma(y, -1);
        --d;
    }
    for (; y.m <= x.m + span_; y = sigma(y), ++d)
        if (y.m >= x.m) g.add(d, hom_dim(x, y));
    return g;
}

GradedDim ZQ::pi2_hom(ZVertex x, ZVertex y, int floor) const {
    GradedDim g;
    g.floor = floor;
    for (int p = 0;; ++p) {
        ZVertex v = sigma({y.m + p, y.i}, floor);
        if (v.m > x.m + span_) break;
        for (int d = floor; v.m <= x.m + span_; v = sigma(v), ++d)
            if (v.m >= x.m) g.add(d, hom_dim(x, v));
    }
    return g;
}

int ZQ::one_cluster_hom(ZVertex x, ZVertex y) const {
    int s = 0;
    for (int m = x.m; m <= x.m + span_; ++m) s += hom_dim(x, {m, y.i});
    return s;
}

ZMor ZQ::zero(ZVertex x, ZVertex y) const {
    return {x, y, std::vector<Fp>(hom_dim(x, y), 0)};
}

ZMor ZQ::identity(ZVertex x) const { return {x, x, {1}}; }

ZMor ZQ::basis(ZVertex x, ZVertex y, int k) const {
    ZMor f = zero(x, y);
    f.c.at(k) = 1;
    return f;
}

std::vector<ZVertex> ZQ::basis_path(ZVertex x, ZVertex y, int k) const {
    auto p = cell(x, y)->paths.at(k);
    for (auto& v : p) v.m += x.m;
    return p;
}

ZMor ZQ::path(const std::vector<ZVertex>& p) const {
    ZVertex x = p.front();
    std::vector<Fp> v{1};
    for (std::size_t t = 1; t < p.size(); ++t) {
        if (!hom_dim(x, p[t])) return zero(x, p.back());
        v = arrow_matrix(x, p[t - 1], p[t]).apply(v);
    }
    return {x, p.back(), v};
}

ZMor ZQ::compose(const ZMor& g, const ZMor& f) const {
    if (!(g.src == f.dst)) throw std::logic_error("ZQ: composing mismatched morphisms");
    ZMor out = zero(f.src, g.dst);
    if (out.c.empty()) return out;
    for (std::size_t b = 0; b < g.c.size(); ++b) {
        if (!g.c[b]) continue;
        auto p = basis_path(g.src, g.dst, int(b));
        std::vector<Fp> v = f.c;
        bool dead = false;
        for (std::size_t t = 1; t < p.size() && !dead; ++t) {
            if (!hom_dim(f.src, p[t])) dead = true;
            else v = arrow_matrix(f.src, p[t - 1], p[t]).apply(v);
        }
        if (dead) continue;
        for (std::size_t k = 0; k < v.size(); ++k) out.c[k] = fadd(out.c[k], fmul(g.c[b], v[k]));
    }
    return out;
}

ZMor ZQ::add(const ZMor& f, const ZMor& g) const {
    ZMor out = f;
    for (std::size_t k = 0; k < out.c.size(); ++k) out.c[k] = fadd(out.c[k], g.c[k]);
    return out;
}

ZMor ZQ::scale(const ZMor& f, Fp s) const {
    ZMor out = f;
    for (auto& x : out.c) x = fmul(x, s);
    return out;
}

ZMor ZQ::translate(const ZMor& f, int p) const {
    return {{f.src.m + p, f.src.i}, {f.dst.m + p, f.dst.i}, f.c};
}

ZMor ZQ::suspend(const ZMor& f, int k) const {
    ZMor out = zero(sigma(f.src, k), sigma(f.dst, k));
    for (std::size_t b = 0; b < f.c.size(); ++b) {
        if (!f.c[b]) continue;
        auto p = basis_path(f.src, f.dst, int(b));
        for (auto& v : p) v = sigma(v, k);
        out = add(out, scale(path(p), f.c[b]));
    }
    return out;
}

}
