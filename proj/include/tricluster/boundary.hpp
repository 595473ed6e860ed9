#pragma once

#include "tricluster/mpr.hpp"

#include <map>
#include <vector>

namespace tc {

constexpr int kDefaultFloor = -2;

// G_side applied to a sum of shifted projective stalks
struct FrozenObject {
    int side = -1;
    std::vector<StalkObject> payload;
};

GradedDim thm1_hom(const Quiver& q, int i, const std::vector<StalkObject>& x, int j,
                   const std::vector<StalkObject>& y, int floor = kDefaultFloor);
GradedDim thm2_hom(const Quiver& q, int i, const std::vector<StalkObject>& x, const MprLabel& y,
                   int floor = kDefaultFloor);

// pmax < 0 sums until every further term vanishes in the window
GradedDim gamma_hom(const Quiver& q, const MprLabel& x, const MprLabel& y, int floor = kDefaultFloor,
                    int pmax = -1);

struct GammaHomTable {
    std::vector<MprLabel> labels;
    std::vector<std::vector<GradedDim>> cells;  // cells[x][y] = Gamma(x, y)
    int floor = kDefaultFloor;
    bool operator==(const GammaHomTable&) const = default;
};

GammaHomTable hom_table(const Quiver& q, int floor = kDefaultFloor);

// arrows of the quiver of H^0(Gamma): dim rad(x, y) - dim rad^2(x, y), by mpr vertex number
std::map<std::pair<int, int>, int> degree0_arrows(const Quiver& q);

}
