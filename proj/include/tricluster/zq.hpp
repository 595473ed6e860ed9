#pragma once

#include "tricluster/field.hpp"
#include "tricluster/graded.hpp"
#include "tricluster/quiver.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace tc {

// vertex (m, i) of ZQ stands for tau^{-m} P_i; i is 1-based
struct ZVertex {
    int m = 0;
    int i = 1;

    auto operator<=>(const ZVertex&) const = default;
};

// morphism in the mesh category, coordinates in the basis of Hom(src, dst)
struct ZMor {
    ZVertex src;
    ZVertex dst;
    std::vector<Fp> c;

    bool is_zero() const;
};

class ZQ {
public:
    static const ZQ& get(const Quiver& q);
    explicit ZQ(const Quiver& q);

    const Quiver& quiver() const { return q_; }
    int n() const { return q_.n(); }
    int h() const { return h_; }
    int e(int i) const { return e_[i - 1]; }
    int star(int i) const { return star_[i - 1]; }
    const std::vector<int>& slice_order() const { return order_; }

    ZVertex sigma(ZVertex v, int k = 1) const;
    ZVertex tau(ZVertex v, int k = 1) const { return {v.m - k, v.i}; }
    std::vector<long> cls(ZVertex v) const;

    std::vector<ZVertex> preds(ZVertex v) const;
    std::vector<ZVertex> succs(ZVertex v) const;
    bool adjacent(ZVertex a, ZVertex b) const;

    // indecomposable modules: (m, i) with 0 <= m < e_i, ids 1-based in (m, i) order
    int label_count() const { return int(labels_.size()); }
    ZVertex label_vertex(int id) const { return labels_.at(id - 1); }
    int label_id(ZVertex v) const;
    std::vector<int> dim_vector(int id) const;
    ZVertex vertex_of(int id, int shift) const { return sigma(label_vertex(id), shift); }
    std::pair<int, int> stalk_of(ZVertex v) const;

    int hom_dim(ZVertex x, ZVertex y) const;
    // dim Hom(x, Sigma^d y) over all d
    GradedDim derived_hom(ZVertex x, ZVertex y) const;
    // sum over p >= 0 of RHom(x, tau^{-p} y), exact in degrees >= floor
    GradedDim pi2_hom(ZVertex x, ZVertex y, int floor) const;
    int one_cluster_hom(ZVertex x, ZVertex y) const;

    ZMor zero(ZVertex x, ZVertex y) const;
    ZMor identity(ZVertex x) const;
    ZMor basis(ZVertex x, ZVertex y, int k) const;
    ZMor path(const std::vector<ZVertex>& p) const;
    ZMor compose(const ZMor& g, const ZMor& f) const;
    ZMor add(const ZMor& f, const ZMor& g) const;
    ZMor scale(const ZMor& f, Fp s) const;
    ZMor translate(const ZMor& f, int p) const;
    ZMor suspend(const ZMor& f, int k) const;
    // representative vertex path of basis element k of Hom(x, y)
    std::vector<ZVertex> basis_path(ZVertex x, ZVertex y, int k) const;

private:
    struct Cell {
        int dim = 0;
        std::vector<std::vector<ZVertex>> paths;  // relative to source slice 0
        std::vector<std::pair<ZVertex, Matrix>> in;  // postcomposition with arrow pred -> this
    };
    struct Table {
        std::vector<std::vector<Cell>> cells;  // [m][i-1], 0 <= m <= span
    };

    const Cell* cell(ZVertex x, ZVertex y) const;
    const Matrix& arrow_matrix(ZVertex x, ZVertex a, ZVertex b) const;
    void knit_classes();
    void knit_table(int i);
    void check_sigma() const;

    Quiver q_;
    int h_ = 0;
    int span_ = 0;
    std::vector<int> e_;
    std::vector<int> star_;
    std::vector<int> order_;
    std::vector<std::vector<int>> in_arrows_;   // Q arrows k -> i, stored k
    std::vector<std::vector<int>> out_arrows_;  // Q arrows i -> j, stored j
    std::vector<std::vector<std::vector<long>>> cls_;
    std::vector<ZVertex> labels_;
    std::vector<Table> tables_;
};

}
