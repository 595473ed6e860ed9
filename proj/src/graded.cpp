#include "tricluster/graded.hpp"

#include <algorithm>

namespace tc {

int GradedDim::at(int d) const {
    auto it = entries.find(d);
    return it == entries.end() ? 0 : it->second;
}

int GradedDim::total() const {
    int s = 0;
    for (const auto& [d, v] : entries) s += v;
    return s;
}

void GradedDim::add(int d, int v) {
    if (!v || (!exact() && d < floor)) return;
    if ((entries[d] += v) == 0) entries.erase(d);
}

GradedDim& GradedDim::operator+=(const GradedDim& o) {
    if (!o.exact()) {
        floor = exact() ? o.floor : std::max(floor, o.floor);
        for (auto it = entries.begin(); it != entries.end();)
            it = it->first < floor ? entries.erase(it) : std::next(it);
    }
    for (const auto& [d, v] : o.entries) add(d, v);
    return *this;
}

GradedDim operator+(GradedDim a, const GradedDim& b) { return a += b; }

GradedDim GradedDim::shifted(int k) const {
    GradedDim g;
    g.floor = exact() ? kExact : floor - k;
    for (const auto& [d, v] : entries) g.entries[d - k] = v;
    return g;
}

GradedDim GradedDim::truncated_le0() const {
    GradedDim g;
    g.floor = floor;
    for (const auto& [d, v] : entries)
        if (d <= 0) g.entries[d] = v;
    return g;
}

GradedDim GradedDim::clipped(int new_floor) const {
    GradedDim g;
    g.floor = exact() ? new_floor : std::max(floor, new_floor);
    for (const auto& [d, v] : entries)
        if (d >= g.floor) g.entries[d] = v;
    return g;
}

std::string GradedDim::str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [d, v] : entries) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(d) + ":" + std::to_string(v);
    }
    s += "}";
    if (!exact()) s += " (d>=" + std::to_string(floor) + ")";
    return s;
}

}
