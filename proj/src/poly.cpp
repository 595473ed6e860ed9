#include "tricluster/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace tc {

namespace {

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly pmod(Poly a, const Poly& b) {
    trim(a);
    Fp inv = finv(b.back());
    while (a.size() >= b.size()) {
        Fp c = fmul(a.back(), inv);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = fsub(a[shift + i], fmul(c, b[i]));
        trim(a);
    }
    return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& m) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = fadd(r[i + j], fmul(a[i], b[j]));
    }
    return pmod(r, m);
}

Poly ppowmod(Poly base, std::uint64_t e, const Poly& m) {
    Poly result{1};
    result = pmod(result, m);
    base = pmod(base, m);
    while (e) {
        if (e & 1) result = pmulmod(result, base, m);
        base = pmulmod(base, base, m);
        e >>= 1;
    }
    return result;
}

Poly pgcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = pmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Fp inv = finv(a.back());
        for (auto& c : a) c = fmul(c, inv);
    }
    return a;
}

Poly pdiv(Poly a, const Poly& b) {
    trim(a);
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    Fp inv = finv(b.back());
    while (a.size() >= b.size()) {
        Fp c = fmul(a.back(), inv);
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = fsub(a[shift + i], fmul(c, b[i]));
        trim(a);
    }
    return q;
}

void split_roots(const Poly& g, std::vector<Fp>& out, std::uint64_t& seed) {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
        out.push_back(fmul(fneg(g[0]), finv(g[1])));
        return;
    }
    for (;;) {
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        Fp a = static_cast<Fp>((seed >> 33) % kPrime);
        Poly h = ppowmod(Poly{a, 1}, (kPrime - 1) / 2, g);
        if (h.empty()) h = {0};
        h[0] = fsub(h[0], 1);
        Poly d = pgcd(g, h);
        if (d.size() > 1 && d.size() < g.size()) {
            split_roots(d, out, seed);
            split_roots(pdiv(g, d), out, seed);
            return;
        }
    }
}

}

Poly charpoly(const Matrix& m0) {
    int n = m0.rows();
    if (n != m0.cols()) throw std::invalid_argument("charpoly of a non-square matrix");
    Matrix h = m0;
    for (int k = 0; k + 2 <= n; ++k) {
        int piv = -1;
        for (int i = k + 1; i < n; ++i)
            if (h(i, k)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != k + 1) {
            for (int j = 0; j < n; ++j) std::swap(h(piv, j), h(k + 1, j));
            for (int i = 0; i < n; ++i) std::swap(h(i, piv), h(i, k + 1));
        }
        Fp inv = finv(h(k + 1, k));
        for (int i = k + 2; i < n; ++i) {
            Fp f = fmul(h(i, k), inv);
            if (!f) continue;
            for (int j = 0; j < n; ++j) h(i, j) = fsub(h(i, j), fmul(f, h(k + 1, j)));
            for (int r = 0; r < n; ++r) h(r, k + 1) = fadd(h(r, k + 1), fmul(f, h(r, i)));
        }
    }
    std::vector<Poly> p(n + 1);
    p[0] = {1};
    for (int k = 1; k <= n; ++k) {
        Poly cur(k + 1, 0);
        const Poly& prev = p[k - 1];
        for (std::size_t i = 0; i < prev.size(); ++i) {
            cur[i + 1] = fadd(cur[i + 1], prev[i]);
            cur[i] = fsub(cur[i], fmul(h(k - 1, k - 1), prev[i]));
        }
        Fp prod = 1;
        for (int i = k - 1; i >= 1; --i) {
            prod = fmul(prod, h(i, i - 1));
            if (!prod) break;
            Fp c = fmul(prod, h(i - 1, k - 1));
            const Poly& q = p[i - 1];
            for (std::size_t j = 0; j < q.size(); ++j) cur[j] = fsub(cur[j], fmul(c, q[j]));
        }
        p[k] = std::move(cur);
    }
    return p[n];
}

std::vector<Fp> poly_roots(const Poly& f0) {
    Poly f = f0;
    trim(f);
    if (f.size() <= 1) return {};
    Poly xp = ppowmod(Poly{0, 1}, kPrime, f);
    xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
    xp[1] = fsub(xp[1], 1);
    Poly g = pgcd(f, xp);
    std::vector<Fp> out;
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;
    split_roots(g, out, seed);
    std::sort(out.begin(), out.end());
    return out;
}

}
