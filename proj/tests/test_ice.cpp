#include "doctest.h"
#include "oracle.hpp"

#include "tricluster/ice.hpp"

#include <queue>

using namespace tc;

namespace {

Quiver linear_a3() { return build_quiver(parse_type("A3"), {{1, 2}, {2, 3}}); }

int count_of(const std::string& s, const std::string& needle) {
    int c = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
    return c;
}

}

TEST_CASE("A3 ice quiver skeleton") {
    IceQuiver iq = build_ice_quiver(linear_a3());
    CHECK(iq.vertices.size() == 12);
    auto has = [&](int s, int t, bool frozen) {
        for (const auto& a : iq.arrows)
            if (a.src == s && a.dst == t && a.frozen == frozen) return true;
        return false;
    };
    for (auto [s, t] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {8, 4}, {11, 8}, {7, 10}}) CHECK(has(s, t, true));
    for (auto [s, t] : std::vector<std::pair<int, int>>{{6, 2}, {5, 1}, {9, 5}, {12, 9}}) CHECK(has(s, t, false));
    CHECK(iq.potential.size() == mpr_ar_quiver(linear_a3()).meshes.size());
}

TEST_CASE("A1 ice quiver is entirely frozen") {
    IceQuiver iq = build_ice_quiver(default_quiver(parse_type("A1")));
    CHECK(iq.vertices.size() == 3);
    for (const auto& v : iq.vertices) CHECK(v.frozen);
    SubQuiver m = mutable_part(iq);
    CHECK(m.vertices.empty());
    CHECK(m.arrows.empty());
    std::string dot = export_ice(iq, "dot");
    CHECK(count_of(dot, "shape=box") == 3);
}

TEST_CASE("structural invariants over every orientation") {
    for (const char* s : {"A1", "A2", "A3", "A4", "D4", "D5"})
        for (const Quiver& q : oracle::all_orientations(parse_type(s))) {
            IceQuiver iq = build_ice_quiver(q);
            const MprARQuiver& ar = mpr_ar_quiver(q);
            int reverse = 0, frozen = 0;
            for (const auto& a : iq.arrows) {
                reverse += a.origin == ArrowOrigin::MeshReverse;
                frozen += a.frozen;
                if (a.origin == ArrowOrigin::MeshReverse) CHECK_FALSE(a.frozen);
            }
            CHECK(reverse == int(ar.meshes.size()));
            CHECK(frozen == 3 * int(q.arrows.size()));
            REQUIRE(iq.potential.size() == ar.meshes.size());
            for (std::size_t k = 0; k < iq.potential.size(); ++k) {
                const auto& t = iq.potential[k];
                const IceArrow& rho = iq.arrows[t.rho - 1];
                CHECK(rho.origin == ArrowOrigin::MeshReverse);
                for (auto [a, b] : t.pairs) {
                    const IceArrow& x = iq.arrows[a - 1];
                    const IceArrow& y = iq.arrows[b - 1];
                    CHECK(rho.dst == x.src);
                    CHECK(x.dst == y.src);
                    CHECK(y.dst == rho.src);
                }
            }
            SubQuiver m = mutable_part(iq);
            int unfrozen = 0;
            for (const auto& v : iq.vertices) unfrozen += !v.frozen;
            CHECK(int(m.vertices.size()) == unfrozen);
            CHECK(parse_ice_json(export_ice(iq, "json")) == iq);
        }
}

TEST_CASE("A3 mutable part is connected") {
    SubQuiver m = mutable_part(build_ice_quiver(linear_a3()));
    REQUIRE(!m.vertices.empty());
    std::set<int> seen{m.vertices[0]};
    std::queue<int> todo;
    todo.push(m.vertices[0]);
    while (!todo.empty()) {
        int v = todo.front();
        todo.pop();
        for (auto [a, b] : m.arrows) {
            int w = a == v ? b : b == v ? a : 0;
            if (w && seen.insert(w).second) todo.push(w);
        }
    }
    CHECK(seen.size() == m.vertices.size());
}

TEST_CASE("exports") {
    IceQuiver iq = build_ice_quiver(linear_a3());
    std::string dot = export_ice(iq, "dot");
    CHECK(count_of(dot, "[label=") == 12);
    CHECK(count_of(dot, "->") == int(iq.arrows.size()));
    CHECK_THROWS_AS(export_ice(iq, "tsv"), ParseError);
    CHECK_THROWS_AS(parse_ice_json("{\"vertices\": 3}"), ParseError);
}
