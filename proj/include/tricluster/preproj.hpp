#pragma once

#include "tricluster/quiver.hpp"
#include "tricluster/rep.hpp"

#include <string>
#include <vector>

namespace tc {

// preprojective algebra over F_p; doubled arrow a < m is the Q arrow, a + m its star
class Preproj {
public:
    static const Preproj& get(const Quiver& q);
    explicit Preproj(const Quiver& q);

    const Quiver& quiver() const { return q_; }
    int n() const { return q_.n(); }
    int arrow_count() const { return int(arrows_.size()); }
    std::pair<int, int> arrow(int a) const { return arrows_[a]; }  // 0-based (src, dst)
    int dim() const { return int(basis_.size()); }
    int top_degree() const { return int(deg_off_.size()) - 3; }

    struct Basis {
        int degree;
        int src;
        int dst;
        std::vector<int> word;
    };
    const Basis& basis(int k) const { return basis_[k]; }
    std::string word_name(int k) const;
    std::vector<int> basis_between(int src, int dst) const;

    using Vec = std::vector<Fp>;
    Vec unit(int k) const;
    Vec vertex(int v) const;
    Vec mul(const Vec& x, const Vec& y) const;
    Vec mul_arrow(const Vec& x, int a) const;
    // image of a Q path, given by arrow indices in path order
    Vec from_q_path(const std::vector<int>& arrows) const;
    Vec q_path_between(int a, int b) const;  // 0-based vertices, zero if no Q path a -> b

    // nu with phi(x y) = phi(y nu(x)), phi the sum of top-degree coordinates
    const Matrix& nakayama_matrix() const;
    Vec nu(const Vec& x) const;
    std::vector<int> nakayama_permutation() const;  // nu(e_v) = e_{perm[v]}

    ShapePtr shape() const { return shape_; }
    // e_v Lambda as a right module
    const Rep& projective(int v) const { return proj_[v]; }
    // basis indices of e_v Lambda e_w, in the coordinate order of projective(v) at w
    const std::vector<int>& proj_basis(int v, int w) const { return proj_idx_[v][w]; }
    // Lambda-linear map e_a Lambda -> module m sending e_a to x
    Morph from_generator(int a, const Rep& m, const std::vector<Fp>& x) const;
    // left multiplication by x in e_b Lambda e_a, as a map e_a Lambda -> e_b Lambda
    Morph left_mult(int a, int b, const Vec& x) const;

private:
    Vec reduce_pair(int d, int b, int a) const;

    Quiver q_;
    std::vector<std::pair<int, int>> arrows_;
    std::vector<Basis> basis_;
    std::vector<int> deg_off_;
    // red_[d][(b_local, a)] for degree d >= 1: coordinates in degree-d basis (local)
    std::vector<std::vector<std::vector<Fp>>> red_;
    std::vector<std::vector<int>> next_;  // next_[k][a]: degree-d+1 candidate index or -1
    ShapePtr shape_;
    std::vector<Rep> proj_;
    std::vector<std::vector<std::vector<int>>> proj_idx_;
    mutable Matrix nu_;
    mutable bool nu_ready_ = false;
};

}
