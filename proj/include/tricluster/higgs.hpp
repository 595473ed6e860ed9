#pragma once

#include "tricluster/mpr.hpp"
#include "tricluster/preproj.hpp"

#include <array>
#include <vector>

namespace tc {

struct LambdaInfo {
    int dim = 0;
    int top_degree = 0;
    std::vector<int> nakayama;  // 1-based, nu(e_i) = e_{nakayama[i-1]}
};

LambdaInfo preprojective_algebra(const Quiver& q);

// T_Q = [[L, 0, nu L], [L, L, 0], [0, L, L]] with L the preprojective algebra
class TQ {
public:
    // twisted = false replaces the nu-twisted block by the regular bimodule
    explicit TQ(const Quiver& q, bool twisted = true);

    static constexpr std::array<std::array<bool, 3>, 3> kBlocks{
        {{true, false, true}, {true, true, false}, {false, true, true}}};

    const Preproj& lambda() const { return l_; }
    int dim() const { return int(blocks_.size()) * l_.dim(); }
    // basis index -> (block row, block col, lambda basis index)
    std::array<int, 3> locate(int k) const;
    int index(int row, int col, int lk) const;
    std::vector<Fp> mul(const std::vector<Fp>& x, const std::vector<Fp>& y) const;
    std::vector<Fp> unit(int k) const;

    int idempotent_count() const { return 3 * l_.n(); }
    // idempotent e_v in diagonal block b, indexed b * n + v
    std::vector<Fp> idempotent(int e) const;
    std::vector<std::vector<Fp>> radical_generators() const;

private:
    const Preproj& l_;
    bool twisted_;
    std::vector<std::pair<int, int>> blocks_;
};

struct TQAlgebra {
    int lambda_dim = 0;
    std::array<std::array<int, 3>, 3> entry_dims{};
    int total_dim = 0;
    std::vector<int> nakayama_perm;  // on the 3n primitive idempotents, block-major, 0-based
    bool selfinjective = false;
    int nakayama_order = 0;       // order of the permutation
    int automorphism_order = 0;   // order of the Nakayama automorphism up to inner ones
};

TQAlgebra tq_algebra(const Quiver& q, bool twisted = true);

// morphism u : U_1 -> U_0 of projective Lambda-modules; u[r][s] lies in e_{p0[r]} L e_{p1[s]}
struct HiggsObject {
    std::vector<int> p1;  // 1-based vertices
    std::vector<int> p0;
    std::vector<std::vector<Preproj::Vec>> u;
    bool operator==(const HiggsObject&) const = default;
};

void check_higgs(const Quiver& q, const HiggsObject& x);
HiggsObject phi_image(const Quiver& q, const MprLabel& x);
HiggsObject phi_image(const Quiver& q, const std::vector<MprLabel>& xs);
HiggsObject higgs_sum(const Quiver& q, const std::vector<HiggsObject>& xs);

Morph higgs_map(const Quiver& q, const HiggsObject& x, Rep& u1, Rep& u0);
Rep higgs_cokernel(const Quiver& q, const HiggsObject& x);
// removes isomorphism summands; iso[i - 1] counts the removed copies of e_i L -> e_i L
HiggsObject strip_isos(const Quiver& q, const HiggsObject& x, std::vector<int>& iso);
// additionally removes the P -> 0 summands; zero[i - 1] counts them
HiggsObject strip_split_epi(const Quiver& q, const HiggsObject& x, std::vector<int>& iso, std::vector<int>& zero);
// minimal projective presentation of a Lambda-module
HiggsObject higgs_presentation(const Quiver& q, const Rep& m);
bool higgs_isomorphic(const Quiver& q, const HiggsObject& a, const HiggsObject& b);

// object of H: frozen summands plus cone(T_1 -> T_0) with T_a sums of Mod labels
struct HiggsLift {
    std::vector<MprLabel> frozen;
    std::vector<MprLabel> t0;
    std::vector<MprLabel> t1;
    int discarded = 0;    // split-epi summands dropped from the cone
    HiggsObject image;    // phi of the lifted object
};

// types A1..A4
HiggsLift lift_morphism(const Quiver& q, const HiggsObject& u);

// indecomposable Lambda-modules, types A1..A4
std::vector<Rep> lambda_indecomposables(const Quiver& q);

// Omega on frozen labels
MprLabel omega_action(const Quiver& q, const MprLabel& x);
int omega_order(const Quiver& q);

}
