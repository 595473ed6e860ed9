#pragma once

#include "tricluster/quiver.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tc {

struct BraidLetter {
    int gen = 1;  // 1-based
    int sign = 1;
    bool operator==(const BraidLetter&) const = default;
};

using BraidWord = std::vector<BraidLetter>;

BraidWord parse_braid_word(const std::string& s, int rank);
std::string braid_word_str(const BraidWord& w);

// Weyl group element acting on the root lattice in the basis of simple roots
struct WeylElement {
    int n = 0;
    std::vector<int> m;  // row-major n x n

    int at(int i, int j) const { return m[std::size_t(i) * n + j]; }
    bool operator==(const WeylElement&) const = default;
    auto operator<=>(const WeylElement&) const = default;
};

WeylElement weyl_identity(int n);
WeylElement simple_reflection(const DynkinType& t, int i);
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement weyl_inverse(const DynkinType& t, const WeylElement& a);
WeylElement longest_element(const DynkinType& t);
int weyl_length(const DynkinType& t, const WeylElement& w);
// s_i with l(s_i w) < l(w), 1-based
std::vector<int> left_descents(const DynkinType& t, const WeylElement& w);
std::vector<int> right_descents(const WeylElement& w);
// type A only: images of 1..n+1
std::vector<int> as_permutation(const WeylElement& w);

WeylElement project_to_weyl(const DynkinType& t, const BraidWord& w);
// lexicographically least reduced word, as a positive braid word
BraidWord canonical_lift(const DynkinType& t, const WeylElement& w);
// every reduced word, lexicographically sorted
std::vector<std::vector<int>> reduced_words(const DynkinType& t, const WeylElement& w);

struct GarsideForm {
    int infimum = 0;
    std::vector<WeylElement> factors;
    bool operator==(const GarsideForm&) const = default;
};

std::string garside_form_str(const DynkinType& t, const GarsideForm& f);

// A1..A5, D4, D5, E6
void check_braid_rank(const DynkinType& t);
GarsideForm garside_normal_form(const DynkinType& t, const BraidWord& w);
BraidWord garside_word(const DynkinType& t, const GarsideForm& f);
bool braid_equal(const DynkinType& t, const BraidWord& a, const BraidWord& b);

// i -> i* read off from w0(alpha_i) = -alpha_{i*}; index 0 unused
std::vector<int> star_map(const DynkinType& t);
BraidWord star_involution(const DynkinType& t, const BraidWord& w);
bool is_in_B_star(const DynkinType& t, const BraidWord& w);

std::vector<std::vector<int>> k0_action(const DynkinType& t, const BraidWord& w);

struct TriangularLabel {
    int side = 0;   // -1, 0, 1
    int vertex = 0;
    bool operator==(const TriangularLabel&) const = default;
};

struct SiltingExtension {
    BraidWord label;  // normal form word
    std::vector<TriangularLabel> objects;
};

SiltingExtension triangular_extension(const DynkinType& t, const BraidWord& w);

}
