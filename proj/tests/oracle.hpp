#pragma once

// independent reference computations for the test suites

#include "tricluster/field.hpp"
#include "tricluster/quiver.hpp"
#include "tricluster/rep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

// closure of the simple roots under simple reflections, positive part
inline std::vector<std::vector<int>> positive_roots(const tc::DynkinType& t) {
    const int n = t.rank;
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    for (auto [a, b] : tc::dynkin_edges(t)) c[a - 1][b - 1] = c[b - 1][a - 1] = -1;
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> todo;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        todo.push_back(e);
    }
    while (!todo.empty()) {
        auto r = todo.back();
        todo.pop_back();
        for (int i = 0; i < n; ++i) {
            int pair = 0;
            for (int j = 0; j < n; ++j) pair += c[i][j] * r[j];
            auto s = r;
            s[i] -= pair;
            if (std::all_of(s.begin(), s.end(), [](int x) { return x >= 0; }) && seen.insert(s).second) todo.push_back(s);
        }
    }
    return {seen.begin(), seen.end()};
}

inline int height_sum(const tc::DynkinType& t) {
    int s = 0;
    for (const auto& r : positive_roots(t)) s += std::accumulate(r.begin(), r.end(), 0);
    return s;
}

// dim Hom(m, n) from the commutativity equations, solved from scratch
inline int hom_dim(const tc::Rep& m, const tc::Rep& n) {
    const auto& sh = *m.shape;
    std::vector<int> off(sh.n + 1, 0);
    for (int v = 0; v < sh.n; ++v) off[v + 1] = off[v] + m.dims[v] * n.dims[v];
    int rows = 0;
    for (auto [s, t] : sh.arrows) rows += n.dims[t] * m.dims[s];
    tc::Matrix eq(rows, off[sh.n]);
    int r = 0;
    for (std::size_t a = 0; a < sh.arrows.size(); ++a) {
        auto [s, t] = sh.arrows[a];
        // (f_t M_a - N_a f_s)(i, j) = 0, f_v stored row-major n.dims[v] x m.dims[v]
        for (int i = 0; i < n.dims[t]; ++i)
            for (int j = 0; j < m.dims[s]; ++j, ++r) {
                for (int k = 0; k < m.dims[t]; ++k) {
                    std::size_t col = off[t] + i * m.dims[t] + k;
                    eq(r, int(col)) = tc::fadd(eq(r, int(col)), m.maps[a](k, j));
                }
                for (int k = 0; k < n.dims[s]; ++k) {
                    std::size_t col = off[s] + k * m.dims[s] + j;
                    eq(r, int(col)) = tc::fsub(eq(r, int(col)), n.maps[a](i, k));
                }
            }
    }
    return off[sh.n] - tc::rank(eq);
}

// <x, y> for representations of the given shape
inline int euler(const tc::Shape& sh, const std::vector<int>& x, const std::vector<int>& y) {
    int s = 0;
    for (int v = 0; v < sh.n; ++v) s += x[v] * y[v];
    for (auto [a, b] : sh.arrows) s -= x[a] * y[b];
    return s;
}

// every orientation of the diagram, by bitmask over the edge list
inline std::vector<tc::Quiver> all_orientations(const tc::DynkinType& t) {
    auto edges = tc::dynkin_edges(t);
    std::vector<tc::Quiver> out;
    for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
        std::vector<std::pair<int, int>> arrows;
        for (std::size_t k = 0; k < edges.size(); ++k)
            arrows.push_back(mask >> k & 1 ? std::pair{edges[k].second, edges[k].first} : edges[k]);
        out.push_back(tc::build_quiver(t, arrows));
    }
    return out;
}

// type A braid group acting on strands: permutation images of 1..n+1
inline std::vector<int> strand_permutation(int n, const std::vector<int>& letters) {
    std::vector<int> p(n + 1);
    std::iota(p.begin(), p.end(), 1);
    for (int g : letters) std::swap(p[std::abs(g) - 1], p[std::abs(g)]);
    return p;
}

}
