// acceptance criteria, one line per criterion
// usage: acceptance [--xfail N,M,...]
// exit status is 0 iff the failing set equals the --xfail set

#include "oracle.hpp"

#include "tricluster/boundary.hpp"
#include "tricluster/braid.hpp"
#include "tricluster/higgs.hpp"
#include "tricluster/ice.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

using namespace tc;
using K = MprLabel::Kind;

namespace {

struct Result {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Result()> run;
};

Quiver linear_a3() { return build_quiver(parse_type("A3"), {{1, 2}, {2, 3}}); }

std::vector<Quiver> orientations(const char* s) { return oracle::all_orientations(parse_type(s)); }

// A3 mpr fixture, vertex k: (p1 -> p0) complex of projectives
const std::vector<std::pair<std::vector<int>, std::vector<int>>> kA3Objects{
    {{}, {1}},  {{}, {2}}, {{}, {3}}, {{1}, {1}}, {{1}, {2}}, {{1}, {3}},
    {{1}, {}},  {{2}, {2}}, {{2}, {3}}, {{2}, {}}, {{3}, {3}}, {{3}, {}}};
const std::vector<std::pair<int, int>> kA3Arrows{{1, 2}, {1, 4}, {2, 3},  {2, 5},  {3, 6},  {4, 5},  {5, 6},   {5, 8},
                                                 {6, 7}, {6, 9}, {7, 10}, {8, 9},  {9, 10}, {9, 11}, {10, 12}, {11, 12}};
const std::vector<std::pair<int, int>> kA3Tau{{5, 1}, {6, 2}, {7, 3}, {9, 5}, {10, 6}, {12, 9}};

Result criterion1() {
    Result r;
    Quiver q = linear_a3();
    const MprARQuiver& ar = mpr_ar_quiver(q);
    r.require(ar.vertices.size() == 12, "vertex count");
    for (std::size_t k = 0; k < ar.vertices.size() && k < kA3Objects.size(); ++k) {
        MprObject x = mpr_object(q, ar.vertices[k]);
        r.require(x.p1 == kA3Objects[k].first && x.p0 == kA3Objects[k].second, "label of vertex " + std::to_string(k + 1));
    }
    auto arrows = ar.arrows;
    std::sort(arrows.begin(), arrows.end());
    r.require(arrows == kA3Arrows, "arrow multiset");
    auto tau = ar.tau;
    std::sort(tau.begin(), tau.end());
    r.require(tau == kA3Tau, "tau pairs");
    return r;
}

Result criterion2() {
    Result r;
    Quiver q = linear_a3();
    IceQuiver iq = build_ice_quiver(q);
    r.require(iq.vertices.size() == 12, "vertex count");
    const std::set<int> boxed{1, 2, 3, 4, 7, 8, 10, 11};
    for (const IceVertex& v : iq.vertices)
        if (v.id != 12) r.require(v.frozen == boxed.count(v.id) > 0, "frozen flag of vertex " + std::to_string(v.id));
    std::multiset<std::tuple<int, int, bool>> want, got;
    for (auto [s, t] : kA3Arrows) want.insert({s, t, false});
    for (auto [s, t] : std::vector<std::pair<int, int>>{{7, 3}, {6, 2}, {10, 6}, {5, 1}, {9, 5}, {12, 9}}) want.insert({s, t, false});
    std::set<std::pair<int, int>> dashed{{1, 2}, {2, 3}, {7, 10}, {10, 12}, {8, 4}, {11, 8}};
    for (auto [s, t] : dashed) {
        auto it = want.find({s, t, false});
        if (it != want.end()) want.erase(it);
        want.insert({s, t, true});
    }
    int reverse = 0;
    for (const IceArrow& a : iq.arrows) {
        got.insert({a.src, a.dst, a.frozen});
        reverse += a.origin == ArrowOrigin::MeshReverse;
    }
    r.require(got == want, "arrow set with frozen flags");
    r.require(reverse == 6, "mesh-reverse arrows");
    const MprARQuiver& ar = mpr_ar_quiver(q);
    r.require(iq.potential.size() == ar.meshes.size() && ar.meshes.size() == 6, "one potential term per mesh");
    for (std::size_t k = 0; k < iq.potential.size() && k < ar.meshes.size(); ++k) {
        const IceArrow& rho = iq.arrows[iq.potential[k].rho - 1];
        r.require(rho.src == ar.meshes[k].target && rho.dst == ar.meshes[k].source, "potential term reverse arrow");
    }
    return r;
}

Result criterion3() {
    Result r;
    Quiver q = linear_a3();
    const MprARQuiver& ar = mpr_ar_quiver(q);
    // F(P_i) = (P_4 -> P_j); the P_4 = D_0 P_1 term lives in Im D_0 and may be erased
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 5}, {2, 6}, {3, 7}, {5, 9}, {6, 10}, {8, 11}, {9, 12}}) {
        LabelComplex c = f_power_label(q, ar.vertices[i - 1], 1);
        bool ok = c.shift == 0 && c.deg0 == std::vector<int>{j} && (c.deg_m1.empty() || c.deg_m1 == std::vector<int>{4});
        r.require(ok, "F(P" + std::to_string(i) + ") = " + c.str());
    }
    return r;
}

Result criterion4() {
    Result r;
    for (const char* s : {"A1", "A2", "A3", "A4", "D4"})
        for (const Quiver& q : orientations(s)) {
            std::vector<std::vector<StalkObject>> payloads;
            std::vector<StalkObject> all;
            for (int a = 1; a <= q.n(); ++a) {
                payloads.push_back({projective_stalk(q, a)});
                all.push_back(projective_stalk(q, a));
            }
            payloads.push_back(all);
            for (int i = -1; i <= 1; ++i) {
                const int j = i == -1 ? 1 : i - 1;
                for (const auto& x : payloads)
                    for (const auto& y : payloads)
                        r.require(thm1_hom(q, i, x, j, y).is_zero(), std::string(s) + " side " + std::to_string(i));
            }
        }
    return r;
}

Result criterion5() {
    Result r;
    GammaHomTable t = hom_table(default_quiver(parse_type("A1")));
    int total = 0;
    for (const auto& row : t.cells)
        for (const auto& c : row) total += c.at(0);
    r.require(total == 6, "degree-0 total " + std::to_string(total));
    return r;
}

Result criterion6() {
    Result r;
    for (const char* s : {"A1", "A2", "A3"})
        for (const Quiver& q : orientations(s))
            for (int i = -1; i <= 1; ++i)
                for (int j = -1; j <= 1; ++j)
                    for (int a = 1; a <= q.n(); ++a)
                        for (int b = 1; b <= q.n(); ++b)
                            r.require(thm2_hom(q, i, {projective_stalk(q, a)}, functor_D(q, j, b)) ==
                                          thm1_hom(q, i, {projective_stalk(q, a)}, j, {projective_stalk(q, b)}),
                                      std::string(s) + " mismatch");
    return r;
}

int permutation_order(const Quiver& q) {
    std::vector<MprLabel> frozen;
    for (int side = -1; side <= 1; ++side)
        for (int i = 1; i <= q.n(); ++i) frozen.push_back(functor_D(q, side, i));
    int order = 1;
    for (const MprLabel& x : frozen) {
        int len = 1;
        for (MprLabel y = omega_action(q, x); !(y == x); y = omega_action(q, y)) {
            if (std::find(frozen.begin(), frozen.end(), y) == frozen.end() || ++len > 3 * q.n()) return -1;
        }
        order = std::lcm(order, len);
    }
    return order;
}

Result criterion7() {
    Result r;
    for (auto [s, want] : std::vector<std::pair<const char*, int>>{{"A2", 6}, {"A3", 6}, {"D4", 3}}) {
        int got = permutation_order(default_quiver(parse_type(s)));
        r.require(got == want, std::string(s) + " order " + std::to_string(got));
    }
    return r;
}

Result criterion8() {
    Result r;
    const std::map<std::string, int> lambda{{"A1", 1}, {"A2", 4}, {"A3", 10}};
    for (auto [s, dim] : lambda) {
        DynkinType t = parse_type(s);
        r.require(oracle::height_sum(t) == dim, s + " orbit oracle");
        TQAlgebra a = tq_algebra(default_quiver(t));
        r.require(a.lambda_dim == dim, s + " dim Lambda");
        r.require(a.total_dim == 6 * dim, s + " total_dim");
        r.require(a.nakayama_order > 0 && 6 % a.nakayama_order == 0, s + " order divides 6");
    }
    int order = tq_algebra(default_quiver(parse_type("A2"))).nakayama_order;
    r.require(order == 6, "A2 Nakayama permutation order " + std::to_string(order));
    return r;
}

Result criterion9() {
    Result r;
    Quiver q = default_quiver(parse_type("A2"));
    for (const Rep& m : lambda_indecomposables(q)) {
        HiggsObject u = higgs_presentation(q, m);
        r.require(higgs_isomorphic(q, lift_morphism(q, u).image, u), "lift round trip");
    }
    auto labels = mpr_indecomposables(q);
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = a + 1; b < labels.size(); ++b)
            r.require(!higgs_isomorphic(q, phi_image(q, labels[a]), phi_image(q, labels[b])),
                      "phi identifies " + labels[a].str() + " and " + labels[b].str());
    return r;
}

BraidWord cat(BraidWord a, const BraidWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

BraidWord inverse(const BraidWord& w) {
    BraidWord v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) v.push_back({it->gen, -it->sign});
    return v;
}

BraidWord random_word(int n, int len, std::mt19937_64& rng) {
    BraidWord w;
    for (int k = 0; k < len; ++k) w.push_back({int(rng() % n) + 1, rng() % 2 ? 1 : -1});
    return w;
}

// free insertions and relator insertions at random places
BraidWord rewrite(const DynkinType& t, BraidWord w, std::mt19937_64& rng) {
    auto cartan = cartan_matrix(t);
    for (int step = 0; step < 3; ++step) {
        std::size_t pos = rng() % (w.size() + 1);
        int i = int(rng() % t.rank) + 1, j = int(rng() % t.rank) + 1;
        BraidWord ins;
        if (rng() % 2) ins = {{i, 1}, {i, -1}};
        else if (i != j && cartan[i - 1][j - 1] == 0) ins = cat(inverse({{i, 1}, {j, 1}}), {{j, 1}, {i, 1}});
        else if (i != j) ins = cat(inverse({{i, 1}, {j, 1}, {i, 1}}), {{j, 1}, {i, 1}, {j, 1}});
        w.insert(w.begin() + long(pos), ins.begin(), ins.end());
    }
    return w;
}

Result criterion10() {
    Result r;
    std::mt19937_64 rng(20240501);
    for (const char* s : {"A2", "A3", "D4"}) {
        DynkinType t = parse_type(s);
        for (int k = 0; k < 1000; ++k) {
            BraidWord w = random_word(t.rank, int(rng() % 12), rng);
            r.require(garside_normal_form(t, w) == garside_normal_form(t, rewrite(t, w, rng)), std::string(s) + " rewrite");
        }
        for (int k = 0; k < 40; ++k) {
            WeylElement w = project_to_weyl(t, random_word(t.rank, 6, rng));
            GarsideForm f = garside_normal_form(t, canonical_lift(t, w));
            for (const auto& rw : reduced_words(t, w)) {
                BraidWord b;
                for (int g : rw) b.push_back({g, 1});
                r.require(garside_normal_form(t, b) == f, std::string(s) + " Matsumoto");
            }
        }
        BraidWord d = canonical_lift(t, longest_element(t));
        for (int k = 0; k < 200; ++k) {
            BraidWord w = random_word(t.rank, int(rng() % 10), rng);
            r.require(braid_equal(t, star_involution(t, w), cat(cat(d, w), inverse(d))), std::string(s) + " star");
        }
        BraidWord d2 = cat(d, d);
        for (int i = 1; i <= t.rank; ++i)
            for (int sign : {1, -1})
                r.require(braid_equal(t, cat(d2, {{i, sign}}), cat({{i, sign}}, d2)), std::string(s) + " centrality");
    }
    return r;
}

Result criterion11() {
    Result r;
    for (const char* s : {"A1", "A2", "A3", "A4", "D4"})
        for (const Quiver& q : orientations(s)) {
            auto ind = list_indecomposables(q);
            for (const auto& [lm, m] : ind)
                for (const auto& [ln, n] : ind)
                    r.require(ext1_dim(q, m, n) == hom_dim(q, m, n) - euler_form(q, lm.dim_vector, ln.dim_vector),
                              std::string(s) + " pair " + std::to_string(lm.id) + "," + std::to_string(ln.id));
        }
    return r;
}

std::set<int> parse_ids(const std::string& s) {
    std::set<int> out;
    std::stringstream in(s);
    for (std::string tok; std::getline(in, tok, ',');) out.insert(std::stoi(tok));
    return out;
}

}

int main(int argc, char** argv) {
    std::set<int> xfail;
    for (int k = 1; k + 1 < argc; ++k)
        if (std::string(argv[k]) == "--xfail") xfail = parse_ids(argv[k + 1]);

    const std::vector<Criterion> criteria{
        {1, "A3 mpr AR quiver matches the fixture", 1, criterion1},
        {2, "A3 ice quiver matches the fixture", 1, criterion2},
        {3, "F-action on the A3 fixture", 1, criterion3},
        {4, "thm1 vanishing over A1-A4, D4", 30, criterion4},
        {5, "A1 boundary endomorphism algebra has dimension 6", 1, criterion5},
        {6, "thm1/thm2 consistency over A1-A3", 60, criterion6},
        {7, "Omega order 6 on A2, A3 and 3 on D4", 1, criterion7},
        {8, "T_Q dimensions and Nakayama order", 5, criterion8},
        {9, "Higgs lift round trip and phi injectivity on A2", 30, criterion9},
        {10, "braid word problem properties over A2, A3, D4", 60, criterion10},
        {11, "ext1 by the AR formula equals the Euler form value", 60, criterion11},
    };

    std::set<int> failed;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_s) {
            r.pass = false;
            r.detail = "over time limit";
        }
        if (!r.pass) failed.insert(c.id);
        std::printf("criterion %2d %s  %s  (%.3f s, limit %.0f s)%s%s%s\n", c.id, r.pass ? "PASS" : "FAIL", c.name, secs,
                    c.limit_s, r.detail.empty() ? "" : ": ", r.detail.c_str(),
                    !r.pass && xfail.count(c.id) ? " [expected failure]" : "");
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
    if (failed != xfail) {
        for (int id : xfail)
            if (!failed.count(id)) std::printf("criterion %d was expected to fail but passed\n", id);
        return 1;
    }
    return 0;
}
