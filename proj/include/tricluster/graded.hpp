#pragma once

#include <climits>
#include <map>
#include <string>

namespace tc {

// entries[d] = dim H^d of a Hom complex; degrees below `floor` are not computed
struct GradedDim {
    static constexpr int kExact = INT_MIN;

    std::map<int, int> entries;
    int floor = kExact;

    bool exact() const { return floor == kExact; }
    int at(int d) const;
    int total() const;
    bool is_zero() const { return entries.empty(); }
    void add(int d, int v);
    GradedDim& operator+=(const GradedDim& o);
    bool operator==(const GradedDim& o) const = default;

    // RHom(X, Σ^k Y) from RHom(X, Y): new[d] = old[d + k]
    GradedDim shifted(int k) const;
    GradedDim truncated_le0() const;
    GradedDim clipped(int new_floor) const;
    std::string str() const;
};

GradedDim operator+(GradedDim a, const GradedDim& b);

}
