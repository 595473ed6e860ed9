#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tc {

struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DynkinType {
    char family = 'A';
    int rank = 1;

    bool operator==(const DynkinType&) const = default;
    std::string name() const { return std::string(1, family) + std::to_string(rank); }
};

DynkinType parse_type(const std::string& s);
void validate_type(const DynkinType& t);
// undirected edges of the diagram, Bourbaki numbering, (i, j) with i < j
std::vector<std::pair<int, int>> dynkin_edges(const DynkinType& t);
std::vector<std::vector<int>> cartan_matrix(const DynkinType& t);
int coxeter_number(const DynkinType& t);
int positive_root_count(const DynkinType& t);

struct Quiver {
    DynkinType type;
    std::vector<std::pair<int, int>> arrows;

    int n() const { return type.rank; }
    bool operator==(const Quiver&) const = default;
};

Quiver build_quiver(const DynkinType& t, std::vector<std::pair<int, int>> arrows);
// every edge oriented from the smaller to the larger label
Quiver default_quiver(const DynkinType& t);
std::vector<std::pair<int, int>> parse_orientation(const std::string& spec);
Quiver parse_quiver_text(const std::string& text);
std::string quiver_to_text(const Quiver& q);

using VertexInvolution = std::vector<int>;

// index 0 unused; map[i] = i*
VertexInvolution nakayama_involution(const Quiver& q);
bool involution_trivial(const VertexInvolution& inv);

}
