#include "tricluster/quiver.hpp"

#include "tricluster/zq.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

namespace tc {

DynkinType parse_type(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.size() < 2) throw ParseError("cannot parse Dynkin type '" + s + "'");
    DynkinType d;
    d.family = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
    try {
        std::size_t used = 0;
        d.rank = std::stoi(t.substr(1), &used);
        if (used != t.size() - 1) throw ParseError("trailing characters");
    } catch (const std::exception&) {
        throw ParseError("cannot parse Dynkin type '" + s + "'");
    }
    validate_type(d);
    return d;
}

void validate_type(const DynkinType& t) {
    bool ok = false;
    switch (t.family) {
    case 'A': ok = t.rank >= 1 && t.rank <= 8; break;
    case 'D': ok = t.rank >= 4 && t.rank <= 8; break;
    case 'E': ok = t.rank >= 6 && t.rank <= 8; break;
    default: throw ParseError(std::string("unknown Dynkin family '") + t.family + "'");
    }
    if (!ok) throw GuardError("rank out of supported range for " + t.name());
}

std::vector<std::pair<int, int>> dynkin_edges(const DynkinType& t) {
    std::vector<std::pair<int, int>> e;
    int n = t.rank;
    if (t.family == 'A') {
        for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
    } else if (t.family == 'D') {
        for (int i = 1; i <= n - 2; ++i) e.push_back({i, i + 1});
        e.push_back({n - 2, n});
    } else {
        e = {{1, 3}, {2, 4}, {3, 4}, {4, 5}};
        for (int i = 5; i < n; ++i) e.push_back({i, i + 1});
    }
    std::sort(e.begin(), e.end());
    return e;
}

std::vector<std::vector<int>> cartan_matrix(const DynkinType& t) {
    int n = t.rank;
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    for (auto [a, b] : dynkin_edges(t)) c[a - 1][b - 1] = c[b - 1][a - 1] = -1;
    return c;
}

int coxeter_number(const DynkinType& t) {
    validate_type(t);
    switch (t.family) {
    case 'A': return t.rank + 1;
    case 'D': return 2 * t.rank - 2;
    default: return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
    }
}

int positive_root_count(const DynkinType& t) {
    return t.rank * coxeter_number(t) / 2;
}

Quiver build_quiver(const DynkinType& t, std::vector<std::pair<int, int>> arrows) {
    validate_type(t);
    std::set<std::pair<int, int>> seen;
    for (auto [s, d] : arrows) {
        if (s < 1 || d < 1 || s > t.rank || d > t.rank)
            throw ParseError("arrow endpoint outside 1.." + std::to_string(t.rank));
        if (s == d) throw ParseError("loop at vertex " + std::to_string(s));
        auto key = std::minmax(s, d);
        if (!seen.insert(key).second)
            throw ParseError("edge " + std::to_string(key.first) + "-" + std::to_string(key.second) +
                             " oriented more than once");
    }
    auto edges = dynkin_edges(t);
    std::set<std::pair<int, int>> expected(edges.begin(), edges.end());
    if (seen != expected) throw ParseError("arrows do not orient the edges of the " + t.name() + " diagram");
    std::sort(arrows.begin(), arrows.end());
    return Quiver{t, std::move(arrows)};
}

Quiver default_quiver(const DynkinType& t) {
    return build_quiver(t, dynkin_edges(t));
}

std::vector<std::pair<int, int>> parse_orientation(const std::string& spec) {
    static const std::regex arrow(R"((\d+)\s*->\s*(\d+))");
    std::vector<std::pair<int, int>> out;
    auto begin = std::sregex_iterator(spec.begin(), spec.end(), arrow);
    std::string leftover = std::regex_replace(spec, arrow, "");
    for (char c : leftover)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != ',' && c != ';')
            throw ParseError("cannot parse orientation '" + spec + "'");
    for (auto it = begin; it != std::sregex_iterator(); ++it)
        out.push_back({std::stoi((*it)[1]), std::stoi((*it)[2])});
    return out;
}

Quiver parse_quiver_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    DynkinType t;
    bool have_type = false;
    std::vector<std::pair<int, int>> arrows;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "type") {
            std::string fam, rank;
            ls >> fam >> rank;
            t = parse_type(fam + rank);
            have_type = true;
        } else {
            auto a = parse_orientation(line);
            arrows.insert(arrows.end(), a.begin(), a.end());
        }
    }
    if (!have_type) throw ParseError("quiver text lacks a 'type' header");
    return build_quiver(t, arrows);
}

std::string quiver_to_text(const Quiver& q) {
    std::ostringstream out;
    out << "type " << q.type.family << ' ' << q.type.rank << '\n';
    for (auto [s, t] : q.arrows) out << s << " -> " << t << '\n';
    return out.str();
}

VertexInvolution nakayama_involution(const Quiver& q) {
    const ZQ& z = ZQ::get(q);
    VertexInvolution inv(q.n() + 1, 0);
    for (int i = 1; i <= q.n(); ++i) inv[i] = z.star(i);
    return inv;
}

bool involution_trivial(const VertexInvolution& inv) {
    for (std::size_t i = 1; i < inv.size(); ++i)
        if (inv[i] != static_cast<int>(i)) return false;
    return true;
}

}
