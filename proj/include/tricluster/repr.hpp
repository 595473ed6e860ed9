#pragma once

#include "tricluster/graded.hpp"
#include "tricluster/quiver.hpp"
#include "tricluster/rep.hpp"
#include "tricluster/zq.hpp"

#include <random>
#include <vector>

namespace tc {

struct IndecLabel {
    int id = 0;
    std::vector<int> dim_vector;
    bool operator==(const IndecLabel&) const = default;
};

struct StalkObject {
    int label = 0;
    int shift = 0;

    bool operator==(const StalkObject&) const = default;
};

struct ARQuiver {
    std::vector<IndecLabel> vertices;
    std::vector<std::pair<int, int>> arrows;  // ids, multiplicity one
    std::vector<std::pair<int, int>> tau;     // (x, tau x)
    bool operator==(const ARQuiver&) const = default;
};

// modules over kQ as representations of the opposite quiver; Q arrow i -> j acts V_j -> V_i
class KQ {
public:
    static const KQ& get(const Quiver& q);
    explicit KQ(const Quiver& q);

    const Quiver& quiver() const { return q_; }
    const ZQ& zq() const { return z_; }
    const ShapePtr& shape() const { return shape_; }

    int count() const { return z_.label_count(); }
    const Rep& rep(int id) const { return reps_.at(id - 1); }
    const PathProjective& projective(int i) const { return proj_.at(i - 1); }
    int projective_id(int i) const { return z_.label_id({0, i}); }
    std::vector<IndecLabel> labels() const;
    // label id of an indecomposable, found by dimension vector
    int identify(const Rep& m) const;

    // minimal projective presentation P1 -> P0 -> M -> 0, summands sorted by vertex
    struct Presentation {
        std::vector<int> p1;
        std::vector<int> p0;
        // coeff[r][s]: scalar of the unique path from p1[s] to p0[r] (Hom(P_a, P_b) = paths a -> b)
        Matrix coeff;
    };
    const Presentation& presentation(int id) const { return pres_.at(id - 1); }
    Presentation present(const Rep& m) const;

    // module map P_a -> P_b given by the path a -> b in Q (scalar multiple)
    Morph path_map(int a, int b) const;
    Morph presentation_map(const std::vector<int>& p1, const std::vector<int>& p0, const Matrix& coeff, const Rep& s1, const Rep& s0) const;

private:
    Quiver q_;
    const ZQ& z_;
    ShapePtr shape_;
    std::vector<PathProjective> proj_;
    std::vector<Rep> reps_;
    std::vector<Presentation> pres_;
};

std::vector<std::pair<IndecLabel, Rep>> list_indecomposables(const Quiver& q);
int hom_dim(const Quiver& q, const Rep& m, const Rep& n);
int ext1_dim(const Quiver& q, const Rep& m, const Rep& n);
int euler_form(const Quiver& q, const std::vector<int>& x, const std::vector<int>& y);
ARQuiver knit_ar_quiver(const Quiver& q);

std::pair<int, int> e_exponent(const Quiver& q, int i);
StalkObject tau(const Quiver& q, StalkObject x);
StalkObject tau_inv(const Quiver& q, StalkObject x);
GradedDim derived_hom(const Quiver& q, StalkObject x, StalkObject y);
GradedDim pi2_hom(const Quiver& q, StalkObject x, StalkObject y, int floor = -2);
int one_cluster_hom(const Quiver& q, StalkObject x, StalkObject y);
StalkObject projective_stalk(const Quiver& q, int i, int shift = 0);

}
