#pragma once

#include "tricluster/field.hpp"

#include <memory>
#include <random>
#include <utility>
#include <vector>

namespace tc {

// finite quiver, 0-based vertices; representations are covariant
struct Shape {
    int n = 0;
    std::vector<std::pair<int, int>> arrows;
};

using ShapePtr = std::shared_ptr<const Shape>;

struct Rep {
    ShapePtr shape;
    std::vector<int> dims;
    std::vector<Matrix> maps;  // maps[a] : dims[src] -> dims[dst]

    int total_dim() const;
};

struct Morph {
    std::vector<Matrix> comps;  // comps[v] : dims_src[v] -> dims_dst[v]
};

Rep zero_rep(const ShapePtr& s);
void check_rep(const Rep& r);
bool is_morphism(const Morph& f, const Rep& m, const Rep& n);
Morph zero_morph(const Rep& m, const Rep& n);
Morph identity_morph(const Rep& m);
Morph compose(const Morph& g, const Morph& f);
Morph add(const Morph& f, const Morph& g);
Morph scale(const Morph& f, Fp c);
bool is_iso(const Morph& f);

std::vector<Morph> hom_basis(const Rep& m, const Rep& n);
int hom_dim(const Rep& m, const Rep& n);
Morph random_combination(const std::vector<Morph>& basis, const Rep& m, const Rep& n, std::mt19937_64& rng);

struct SubRep {
    Rep rep;
    Morph incl;
};

struct QuotRep {
    Rep rep;
    Morph proj;
};

SubRep kernel(const Morph& f, const Rep& m, const Rep& n);
SubRep image(const Morph& f, const Rep& m, const Rep& n);
QuotRep cokernel(const Morph& f, const Rep& m, const Rep& n);
// subspaces given by column bases, assumed stable under the maps
SubRep subrep(const Rep& m, const std::vector<Matrix>& bases);
QuotRep quotient(const Rep& m, const std::vector<Matrix>& bases);

struct SumRep {
    Rep rep;
    std::vector<Morph> inj;
    std::vector<Morph> proj;
};

SumRep direct_sum(const std::vector<Rep>& parts, const ShapePtr& s);

std::vector<Matrix> radical_spaces(const Rep& m);
std::vector<int> top_dims(const Rep& m);
std::vector<Matrix> socle_spaces(const Rep& m);

bool isomorphic(const Rep& a, const Rep& b, std::mt19937_64& rng);
// Fitting decomposition with random endomorphisms; summands are indecomposable
std::vector<SubRep> decompose(const Rep& m, std::mt19937_64& rng);
bool is_indecomposable(const Rep& m, std::mt19937_64& rng);

// projective module spanned by paths; paths[w][k] lists the arrow word of basis vector k at w
struct PathProjective {
    Rep rep;
    int vertex = 0;
    std::vector<std::vector<std::vector<int>>> paths;
};

std::vector<Fp> act_word(const Rep& m, const std::vector<int>& word, std::vector<Fp> x);
// morphism from a path projective sending its generator to x in m at the generating vertex
Morph from_generator(const PathProjective& p, const Rep& m, const std::vector<Fp>& x);
// acyclic shapes only
PathProjective path_projective(const ShapePtr& s, int v);

}
