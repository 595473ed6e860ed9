#include "tricluster/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace tc {

BraidWord parse_braid_word(const std::string& s, int rank) {
    std::string t = s;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    BraidWord w;
    std::string tok;
    while (in >> tok) {
        int g = 0;
        std::size_t used = 0;
        try {
            g = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("bad braid letter '" + tok + "'");
        }
        if (used != tok.size() || g == 0 || std::abs(g) > rank)
            throw ParseError("braid letter '" + tok + "' out of range 1.." + std::to_string(rank));
        w.push_back({std::abs(g), g > 0 ? 1 : -1});
    }
    return w;
}

std::string braid_word_str(const BraidWord& w) {
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += ' ';
        s += std::to_string(l.sign * l.gen);
    }
    return s;
}

WeylElement weyl_identity(int n) {
    WeylElement w{n, std::vector<int>(std::size_t(n) * n, 0)};
    for (int i = 0; i < n; ++i) w.m[std::size_t(i) * n + i] = 1;
    return w;
}

WeylElement simple_reflection(const DynkinType& t, int i) {
    auto c = cartan_matrix(t);
    int n = t.rank;
    if (i < 1 || i > n) throw std::invalid_argument("reflection index out of range");
    WeylElement w = weyl_identity(n);
    for (int j = 0; j < n; ++j) w.m[std::size_t(i - 1) * n + j] -= c[i - 1][j];
    return w;
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
    int n = a.n;
    WeylElement c{n, std::vector<int>(std::size_t(n) * n, 0)};
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int x = a.at(i, k);
            if (!x) continue;
            for (int j = 0; j < n; ++j) c.m[std::size_t(i) * n + j] += x * b.at(k, j);
        }
    return c;
}

namespace {

bool negative_column(const WeylElement& w, int j) {
    for (int i = 0; i < w.n; ++i) {
        if (w.at(i, j) < 0) return true;
        if (w.at(i, j) > 0) return false;
    }
    return false;
}

}

std::vector<int> right_descents(const WeylElement& w) {
    std::vector<int> d;
    for (int j = 0; j < w.n; ++j)
        if (negative_column(w, j)) d.push_back(j + 1);
    return d;
}

WeylElement weyl_inverse(const DynkinType& t, const WeylElement& a) {
    WeylElement w = a, inv = weyl_identity(a.n);
    for (;;) {
        auto d = right_descents(w);
        if (d.empty()) return inv;
        WeylElement s = simple_reflection(t, d.front());
        w = weyl_mul(w, s);
        inv = weyl_mul(inv, s);
    }
}

std::vector<int> left_descents(const DynkinType& t, const WeylElement& w) {
    return right_descents(weyl_inverse(t, w));
}

int weyl_length(const DynkinType& t, const WeylElement& w) { return int(canonical_lift(t, w).size()); }

WeylElement longest_element(const DynkinType& t) {
    WeylElement w = weyl_identity(t.rank);
    for (;;) {
        int next = 0;
        for (int i = 1; i <= t.rank && !next; ++i)
            if (!negative_column(w, i - 1)) next = i;
        if (!next) return w;
        w = weyl_mul(w, simple_reflection(t, next));
    }
}

std::vector<int> as_permutation(const WeylElement& w) {
    const int n = w.n;
    std::vector<int> perm(n + 1, 0);
    for (int k = 0; k < n; ++k) {
        int lo = -1, hi = -1, sign = 0;
        for (int i = 0; i < n; ++i)
            if (w.at(i, k)) {
                if (lo < 0) lo = i;
                hi = i;
                sign = w.at(i, k);
            }
        int a = lo + 1, b = hi + 2;
        if (sign < 0) std::swap(a, b);
        perm[k] = a;
        perm[k + 1] = b;
    }
    return perm;
}

WeylElement project_to_weyl(const DynkinType& t, const BraidWord& w) {
    WeylElement x = weyl_identity(t.rank);
    for (const auto& l : w) x = weyl_mul(x, simple_reflection(t, l.gen));
    return x;
}

BraidWord canonical_lift(const DynkinType& t, const WeylElement& w) {
    BraidWord out;
    WeylElement x = w;
    for (;;) {
        auto d = left_descents(t, x);
        if (d.empty()) return out;
        out.push_back({d.front(), 1});
        x = weyl_mul(simple_reflection(t, d.front()), x);
    }
}

std::vector<std::vector<int>> reduced_words(const DynkinType& t, const WeylElement& w) {
    auto d = left_descents(t, w);
    if (d.empty()) return {{}};
    std::vector<std::vector<int>> out;
    for (int i : d)
        for (auto& rest : reduced_words(t, weyl_mul(simple_reflection(t, i), w))) {
            rest.insert(rest.begin(), i);
            out.push_back(std::move(rest));
        }
    std::sort(out.begin(), out.end());
    return out;
}

void check_braid_rank(const DynkinType& t) {
    bool ok = (t.family == 'A' && t.rank <= 5) || (t.family == 'D' && t.rank <= 5) || (t.family == 'E' && t.rank == 6);
    if (!ok) throw GuardError("Garside computations support A1..A5, D4, D5, E6; got " + t.name());
}

namespace {

// the whole Weyl group with multiplication by simple reflections on both sides
struct WeylTable {
    DynkinType type;
    std::vector<WeylElement> elems;
    std::map<WeylElement, int> index;
    std::vector<std::vector<int>> rmul, lmul;
    std::vector<unsigned> rdesc, ldesc;
    std::vector<int> tau;  // conjugation by w0
    int w0 = 0;
    std::vector<int> star;

    explicit WeylTable(const DynkinType& t) : type(t) {
        const int n = t.rank;
        std::vector<WeylElement> s;
        for (int i = 1; i <= n; ++i) s.push_back(simple_reflection(t, i));
        elems.push_back(weyl_identity(n));
        index[elems[0]] = 0;
        for (std::size_t k = 0; k < elems.size(); ++k)
            for (int i = 0; i < n; ++i) {
                WeylElement x = weyl_mul(elems[k], s[i]);
                if (!index.count(x)) {
                    index[x] = int(elems.size());
                    elems.push_back(std::move(x));
                }
            }
        const int size = int(elems.size());
        rmul.assign(size, std::vector<int>(n));
        lmul.assign(size, std::vector<int>(n));
        rdesc.assign(size, 0);
        ldesc.assign(size, 0);
        for (int k = 0; k < size; ++k)
            for (int i = 0; i < n; ++i) {
                rmul[k][i] = index.at(weyl_mul(elems[k], s[i]));
                lmul[k][i] = index.at(weyl_mul(s[i], elems[k]));
                if (negative_column(elems[k], i)) rdesc[k] |= 1u << i;
            }
        for (int k = 0; k < size; ++k)
            for (int i = 0; i < n; ++i)
                if (length_of(k) > length_of(lmul[k][i])) ldesc[k] |= 1u << i;
        w0 = index.at(longest_element(t));
        star = star_map(t);
        tau.assign(size, 0);
        const WeylElement& l0 = elems[w0];
        for (int k = 0; k < size; ++k) tau[k] = index.at(weyl_mul(l0, weyl_mul(elems[k], l0)));
    }

    mutable std::vector<int> len_;
    int length_of(int k) const {
        if (len_.empty()) {
            len_.assign(elems.size(), -1);
            len_[0] = 0;
            std::vector<int> queue{0};
            for (std::size_t q = 0; q < queue.size(); ++q)
                for (int i = 0; i < type.rank; ++i) {
                    int y = rmul[queue[q]][i];
                    if (len_[y] < 0) {
                        len_[y] = len_[queue[q]] + 1;
                        queue.push_back(y);
                    }
                }
        }
        return len_[k];
    }
};

const WeylTable& weyl_table(const DynkinType& t) {
    check_braid_rank(t);
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<WeylTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[t.name()];
    if (!slot) slot = std::make_unique<WeylTable>(t);
    return *slot;
}

// makes (a, b) left-weighted; true when something moved
bool left_weight(const WeylTable& w, int& a, int& b) {
    bool moved = false;
    for (;;) {
        unsigned m = w.ldesc[b] & ~w.rdesc[a];
        if (!m) return moved;
        int i = __builtin_ctz(m);
        a = w.rmul[a][i];
        b = w.lmul[b][i];
        moved = true;
    }
}

}

std::string garside_form_str(const DynkinType& t, const GarsideForm& f) {
    std::string s = "D^" + std::to_string(f.infimum);
    for (const auto& x : f.factors) s += " [" + braid_word_str(canonical_lift(t, x)) + "]";
    return s;
}

GarsideForm garside_normal_form(const DynkinType& t, const BraidWord& word) {
    const WeylTable& w = weyl_table(t);
    int inf = 0;
    std::vector<int> fac;
    for (const auto& l : word) {
        if (l.gen < 1 || l.gen > t.rank) throw ParseError("braid generator out of range");
        if (l.sign > 0) {
            fac.push_back(w.rmul[0][l.gen - 1]);
        } else {
            --inf;
            for (int& f : fac) f = w.tau[f];
            fac.push_back(w.rmul[w.w0][l.gen - 1]);
        }
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (int j = int(fac.size()) - 2; j >= 0; --j) changed = left_weight(w, fac[j], fac[j + 1]) || changed;
    }
    std::size_t lead = 0;
    while (lead < fac.size() && fac[lead] == w.w0) ++lead;
    inf += int(lead);
    fac.erase(fac.begin(), fac.begin() + long(lead));
    while (!fac.empty() && fac.back() == 0) fac.pop_back();
    GarsideForm g;
    g.infimum = inf;
    for (int f : fac) g.factors.push_back(w.elems[f]);
    return g;
}

BraidWord garside_word(const DynkinType& t, const GarsideForm& f) {
    BraidWord out;
    BraidWord delta = canonical_lift(t, longest_element(t));
    for (int k = 0; k < std::abs(f.infimum); ++k) {
        if (f.infimum > 0) {
            out.insert(out.end(), delta.begin(), delta.end());
        } else {
            for (auto it = delta.rbegin(); it != delta.rend(); ++it) out.push_back({it->gen, -1});
        }
    }
    for (const auto& x : f.factors) {
        auto l = canonical_lift(t, x);
        out.insert(out.end(), l.begin(), l.end());
    }
    return out;
}

bool braid_equal(const DynkinType& t, const BraidWord& a, const BraidWord& b) {
    return garside_normal_form(t, a) == garside_normal_form(t, b);
}

std::vector<int> star_map(const DynkinType& t) {
    WeylElement w0 = longest_element(t);
    std::vector<int> star(t.rank + 1, 0);
    for (int i = 0; i < t.rank; ++i)
        for (int j = 0; j < t.rank; ++j)
            if (w0.at(j, i) == -1) star[i + 1] = j + 1;
    return star;
}

BraidWord star_involution(const DynkinType& t, const BraidWord& w) {
    auto star = star_map(t);
    BraidWord out;
    for (const auto& l : w) {
        if (l.gen < 1 || l.gen > t.rank) throw ParseError("braid generator out of range");
        out.push_back({star[l.gen], l.sign});
    }
    return out;
}

bool is_in_B_star(const DynkinType& t, const BraidWord& w) { return braid_equal(t, star_involution(t, w), w); }

std::vector<std::vector<int>> k0_action(const DynkinType& t, const BraidWord& w) {
    WeylElement x = project_to_weyl(t, w);
    std::vector<std::vector<int>> out(t.rank, std::vector<int>(t.rank));
    for (int i = 0; i < t.rank; ++i)
        for (int j = 0; j < t.rank; ++j) out[i][j] = x.at(i, j);
    return out;
}

SiltingExtension triangular_extension(const DynkinType& t, const BraidWord& w) {
    if (!is_in_B_star(t, w)) throw GuardError("braid " + braid_word_str(w) + " is not fixed by the star involution");
    SiltingExtension s;
    s.label = garside_word(t, garside_normal_form(t, w));
    for (int side = -1; side <= 1; ++side)
        for (int v = 1; v <= t.rank; ++v) s.objects.push_back({side, v});
    return s;
}

}
