#pragma once

#include "tricluster/repr.hpp"

#include <string>
#include <vector>

namespace tc {

struct MprLabel {
    enum class Kind { Mod, Dzero, Done };
    Kind kind = Kind::Mod;
    int index = 0;  // module id for Mod, vertex for Dzero / Done

    bool operator==(const MprLabel&) const = default;
    std::string str() const;
};

MprLabel parse_mpr_label(const std::string& s);

// morphism between projectives; coeff[r][s] scales the unique path p1[s] -> p0[r]
struct MprObject {
    std::vector<int> p1;
    std::vector<int> p0;
    Matrix coeff;
};

struct Mesh {
    int target = 0;
    int source = 0;
    std::vector<std::pair<int, int>> pairs;  // (source -> middle, middle -> target) arrow ids
    bool operator==(const Mesh&) const = default;
};

struct MprARQuiver {
    std::vector<MprLabel> vertices;           // vertex k is vertices[k - 1]
    std::vector<std::pair<int, int>> arrows;  // arrow k is arrows[k - 1], sorted
    std::vector<std::pair<int, int>> tau;     // (x, tau x)
    std::vector<Mesh> meshes;

    int vertex_of(const MprLabel& l) const;
    int arrow_id(int s, int t) const;
    bool operator==(const MprARQuiver&) const = default;
};

std::vector<MprLabel> mpr_indecomposables(const Quiver& q);
const MprARQuiver& mpr_ar_quiver(const Quiver& q);

MprObject mpr_object(const Quiver& q, const MprLabel& l);
// functor_D(-1|0|1, P_i)
MprLabel functor_D(const Quiver& q, int side, int i);
std::vector<int> functor_C(int which, const MprObject& x);
std::vector<StalkObject> cone(const Quiver& q, const MprLabel& l);

// commuting-square model: representation of Q^op x (1 -> 0)
Rep mpr_rep(const Quiver& q, const MprObject& x);
int mpr_hom_dim(const Quiver& q, const MprObject& x, const MprObject& y);
// cokernel module of the underlying map
Rep mpr_cokernel(const Quiver& q, const MprObject& x);

// two-term complex of representables of mpr, vertices in mpr_ar_quiver numbering
struct LabelComplex {
    std::vector<int> deg_m1;
    std::vector<int> deg0;
    int shift = 0;
    bool d0_tracked = false;  // lives in Im D_0, recorded through D_0 tau^{-1}

    bool operator==(const LabelComplex&) const = default;
    std::string str() const;
};

// F^p on a label, in per(A) modulo Im D_0
LabelComplex f_power_label(const Quiver& q, const MprLabel& x, int p);

}
