#pragma once

#include "tricluster/mpr.hpp"

#include <string>
#include <vector>

namespace tc {

struct IceVertex {
    int id = 0;
    bool frozen = false;
    MprLabel label;

    bool operator==(const IceVertex&) const = default;
};

enum class ArrowOrigin { AR, MeshReverse, Rule2Frozen };

struct IceArrow {
    int src = 0;
    int dst = 0;
    bool frozen = false;
    ArrowOrigin origin = ArrowOrigin::AR;

    bool operator==(const IceArrow&) const = default;
};

struct PotentialTerm {
    int rho = 0;
    std::vector<std::pair<int, int>> pairs;

    bool operator==(const PotentialTerm&) const = default;
};

// arrow k is arrows[k - 1]
struct IceQuiver {
    std::vector<IceVertex> vertices;
    std::vector<IceArrow> arrows;
    std::vector<PotentialTerm> potential;

    bool operator==(const IceQuiver&) const = default;
};

IceQuiver build_ice_quiver(const Quiver& q);

struct SubQuiver {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> arrows;
};

SubQuiver mutable_part(const IceQuiver& iq);

std::string export_ice(const IceQuiver& iq, const std::string& format);
IceQuiver parse_ice_json(const std::string& text);
const char* origin_name(ArrowOrigin o);

}
