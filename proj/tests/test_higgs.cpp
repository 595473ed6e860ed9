#include "doctest.h"
#include "oracle.hpp"

#include "tricluster/higgs.hpp"

#include <numeric>

using namespace tc;
using K = MprLabel::Kind;

namespace {

Preproj::Vec random_vec(int n, std::mt19937_64& rng) {
    Preproj::Vec v(n);
    for (auto& x : v) x = Fp(rng() % kPrime);
    return v;
}

Fp frobenius(const Preproj& l, const Preproj::Vec& x) {
    Fp s = 0;
    for (int k = 0; k < l.dim(); ++k)
        if (l.basis(k).degree == l.top_degree()) s = fadd(s, x[k]);
    return s;
}

std::vector<MprLabel> frozen_labels(const Quiver& q) {
    std::vector<MprLabel> out;
    for (int side = -1; side <= 1; ++side)
        for (int i = 1; i <= q.n(); ++i) out.push_back(functor_D(q, side, i));
    return out;
}

}

TEST_CASE("preprojective algebra dimensions") {
    CHECK(preprojective_algebra(default_quiver(parse_type("A1"))).dim == 1);
    CHECK(preprojective_algebra(default_quiver(parse_type("A2"))).dim == 4);
    CHECK(preprojective_algebra(default_quiver(parse_type("A3"))).dim == 10);
    for (const char* s : {"A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6"}) {
        DynkinType t = parse_type(s);
        for (const Quiver& q : oracle::all_orientations(t)) {
            LambdaInfo info = preprojective_algebra(q);
            REQUIRE(info.dim == oracle::height_sum(t));
            CHECK(info.top_degree == coxeter_number(t) - 2);
            if (t.rank > 3) break;
        }
    }
}

TEST_CASE("Lambda dimension equals the pi2 orbit sum") {
    for (const char* s : {"A2", "A3", "A4", "D4"}) {
        Quiver q = default_quiver(parse_type(s));
        int total = 0;
        for (int i = 1; i <= q.n(); ++i)
            for (int j = 1; j <= q.n(); ++j)
                total += pi2_hom(q, projective_stalk(q, i), projective_stalk(q, j), 0).at(0);
        CHECK(preprojective_algebra(q).dim == total);
    }
}

TEST_CASE("Nakayama automorphism of Lambda") {
    std::mt19937_64 rng(3);
    for (const char* s : {"A2", "A3", "A4", "D4", "D5"}) {
        Quiver q = default_quiver(parse_type(s));
        const Preproj& l = Preproj::get(q);
        auto perm = preprojective_algebra(q).nakayama;
        auto inv = nakayama_involution(q);
        for (int i = 1; i <= q.n(); ++i) CHECK(perm[i - 1] == inv[i]);
        for (int t = 0; t < 20; ++t) {
            auto x = random_vec(l.dim(), rng), y = random_vec(l.dim(), rng);
            CHECK(frobenius(l, l.mul(x, y)) == frobenius(l, l.mul(y, l.nu(x))));
        }
    }
}

TEST_CASE("preprojective relations hold at every vertex") {
    for (const char* s : {"A3", "D4"}) {
        Quiver q = default_quiver(parse_type(s));
        const Preproj& l = Preproj::get(q);
        const int m = int(q.arrows.size());
        for (int v = 0; v < q.n(); ++v) {
            Preproj::Vec r(l.dim(), 0);
            for (int a = 0; a < m; ++a) {
                auto [src, dst] = l.arrow(a);
                if (src == v) {
                    auto w = l.mul_arrow(l.mul_arrow(l.vertex(v), a), a + m);
                    for (int k = 0; k < l.dim(); ++k) r[k] = fadd(r[k], w[k]);
                }
                if (dst == v) {
                    auto w = l.mul_arrow(l.mul_arrow(l.vertex(v), a + m), a);
                    for (int k = 0; k < l.dim(); ++k) r[k] = fsub(r[k], w[k]);
                }
            }
            CHECK(std::all_of(r.begin(), r.end(), [](Fp x) { return x == 0; }));
        }
    }
}

TEST_CASE("T_Q dimensions and associativity") {
    CHECK(tq_algebra(default_quiver(parse_type("A1"))).total_dim == 6);
    CHECK(tq_algebra(default_quiver(parse_type("A2"))).total_dim == 24);
    for (const char* s : {"A1", "A2", "A3", "A4", "D4"}) {
        Quiver q = default_quiver(parse_type(s));
        TQAlgebra a = tq_algebra(q);
        CHECK(a.total_dim == 6 * preprojective_algebra(q).dim);
        CHECK(a.selfinjective);
        CHECK(6 % a.nakayama_order == 0);
    }
    std::mt19937_64 rng(5);
    for (const char* s : {"A2", "A3"}) {
        TQ t(default_quiver(parse_type(s)));
        for (int k = 0; k < 30; ++k) {
            auto x = random_vec(t.dim(), rng), y = random_vec(t.dim(), rng), z = random_vec(t.dim(), rng);
            REQUIRE(t.mul(t.mul(x, y), z) == t.mul(x, t.mul(y, z)));
        }
        std::vector<Fp> one(t.dim(), 0);
        for (int e = 0; e < t.idempotent_count(); ++e) {
            auto ie = t.idempotent(e);
            CHECK(t.mul(ie, ie) == ie);
            for (int k = 0; k < t.dim(); ++k) one[k] = fadd(one[k], ie[k]);
        }
        auto x = random_vec(t.dim(), rng);
        CHECK(t.mul(one, x) == x);
        CHECK(t.mul(x, one) == x);
    }
}

TEST_CASE("T_Q Nakayama automorphism of A2 has order 6" * doctest::may_fail()) {
    CHECK(tq_algebra(default_quiver(parse_type("A2"))).automorphism_order == 6);
}

TEST_CASE("T_Q without the twist") {
    TQAlgebra a = tq_algebra(default_quiver(parse_type("A2")), false);
    CHECK(a.total_dim == 24);
    CHECK(a.nakayama_order == 6);
}

TEST_CASE("phi_image on frozen labels") {
    Quiver q = default_quiver(parse_type("A3"));
    const Preproj& l = Preproj::get(q);
    for (int i = 1; i <= 3; ++i) {
        HiggsObject d0 = phi_image(q, functor_D(q, 0, i));
        CHECK(d0.p1 == std::vector<int>{i});
        CHECK(d0.p0 == std::vector<int>{i});
        CHECK(d0.u[0][0] == l.vertex(i - 1));
        HiggsObject d1 = phi_image(q, functor_D(q, 1, i));
        CHECK(d1.p1 == std::vector<int>{i});
        CHECK(d1.p0.empty());
    }
}

TEST_CASE("phi_image is injective on isoclasses") {
    for (const char* s : {"A2", "A3"}) {
        Quiver q = default_quiver(parse_type(s));
        auto labels = mpr_indecomposables(q);
        for (std::size_t a = 0; a < labels.size(); ++a)
            for (std::size_t b = 0; b < labels.size(); ++b)
                CHECK(higgs_isomorphic(q, phi_image(q, labels[a]), phi_image(q, labels[b])) == (a == b));
    }
}

TEST_CASE("phi_image of a simple over A2 presents the induced module") {
    Quiver q = default_quiver(parse_type("A2"));
    const KQ& k = KQ::get(q);
    for (const auto& lab : k.labels()) {
        if (std::accumulate(lab.dim_vector.begin(), lab.dim_vector.end(), 0) != 1) continue;
        HiggsObject h = phi_image(q, {K::Mod, lab.id});
        auto pres = k.presentation(lab.id);
        CHECK(h.p1 == pres.p1);
        CHECK(h.p0 == pres.p0);
        Rep c = higgs_cokernel(q, h);
        CHECK(higgs_isomorphic(q, h, higgs_presentation(q, c)));
    }
}

TEST_CASE("Lambda(A2) has four indecomposables") {
    CHECK(lambda_indecomposables(default_quiver(parse_type("A2"))).size() == 4);
    CHECK(lambda_indecomposables(default_quiver(parse_type("A1"))).size() == 1);
}

TEST_CASE("lift_morphism examples") {
    Quiver q = default_quiver(parse_type("A2"));
    for (int i = 1; i <= 2; ++i) {
        HiggsLift d0 = lift_morphism(q, phi_image(q, functor_D(q, 0, i)));
        CHECK(d0.frozen == std::vector<MprLabel>{{K::Dzero, i}});
        CHECK(d0.t0.empty());
        HiggsLift d1 = lift_morphism(q, phi_image(q, functor_D(q, 1, i)));
        CHECK(d1.frozen == std::vector<MprLabel>{{K::Done, i}});
        CHECK(higgs_isomorphic(q, d1.image, phi_image(q, functor_D(q, 1, i))));
    }
    CHECK_THROWS_AS(lift_morphism(default_quiver(parse_type("D4")), phi_image(default_quiver(parse_type("D4")), functor_D(default_quiver(parse_type("D4")), 0, 1))), GuardError);
}

TEST_CASE("lift round trip on Lambda-indecomposables") {
    for (const char* s : {"A1", "A2", "A3"}) {
        Quiver q = default_quiver(parse_type(s));
        for (const Rep& m : lambda_indecomposables(q)) {
            HiggsObject u = higgs_presentation(q, m);
            HiggsLift lift = lift_morphism(q, u);
            REQUIRE(higgs_isomorphic(q, lift.image, u));
        }
        for (const MprLabel& l : mpr_indecomposables(q)) {
            HiggsObject u = phi_image(q, l);
            CHECK(higgs_isomorphic(q, lift_morphism(q, u).image, u));
        }
    }
}

TEST_CASE("omega_action") {
    for (const char* s : {"A1", "A2", "A3", "A4", "D4", "D5", "E6"}) {
        Quiver q = default_quiver(parse_type(s));
        const ZQ& z = ZQ::get(q);
        auto frozen = frozen_labels(q);
        std::set<std::pair<int, int>> images;
        for (int i = 1; i <= q.n(); ++i) {
            CHECK(omega_action(q, functor_D(q, 1, i)) == functor_D(q, 0, i));
            CHECK(omega_action(q, functor_D(q, 0, i)) == functor_D(q, -1, i));
            CHECK(omega_action(q, functor_D(q, -1, i)) == functor_D(q, 1, z.star(i)));
        }
        int order = 1;
        for (const auto& x : frozen) {
            MprLabel y = omega_action(q, x);
            CHECK(std::find(frozen.begin(), frozen.end(), y) != frozen.end());
            images.insert({int(y.kind), y.index});
            int len = 1;
            for (MprLabel w = y; !(w == x); w = omega_action(q, w)) ++len;
            order = std::lcm(order, len);
        }
        CHECK(images.size() == frozen.size());
        CHECK(order == omega_order(q));
        CHECK(omega_order(q) == (involution_trivial(nakayama_involution(q)) ? 3 : 6));
    }
    CHECK(omega_order(default_quiver(parse_type("A3"))) == 6);
    CHECK(omega_order(default_quiver(parse_type("D4"))) == 3);
}

TEST_CASE("check_higgs rejects ill-typed entries") {
    Quiver q = default_quiver(parse_type("A2"));
    const Preproj& l = Preproj::get(q);
    HiggsObject bad{{1}, {2}, {{l.vertex(0)}}};
    CHECK_THROWS_AS(check_higgs(q, bad), ParseError);
}
