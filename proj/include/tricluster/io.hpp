#pragma once

#include "tricluster/boundary.hpp"
#include "tricluster/braid.hpp"
#include "tricluster/higgs.hpp"
#include "tricluster/repr.hpp"

#include "json.hpp"

#include <string>

namespace tc {

using Json = nlohmann::json;

Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);
// JSON mirror or the line format, chosen by the first non-blank character
Quiver parse_quiver(const std::string& text);

Json ar_to_json(const ARQuiver& ar);
ARQuiver ar_from_json(const Json& j);
std::string export_ar(const ARQuiver& ar, const std::string& format);

Json mpr_to_json(const MprARQuiver& ar);
MprARQuiver mpr_from_json(const Json& j);
std::string export_mpr(const MprARQuiver& ar, const std::string& format);

// sparse "degree:dim" list, "-" when zero
std::string graded_cell(const GradedDim& g);
GradedDim parse_graded_cell(const std::string& s, int floor);
Json graded_to_json(const GradedDim& g);
GradedDim graded_from_json(const Json& j);

Json hom_table_to_json(const GammaHomTable& t);
GammaHomTable hom_table_from_json(const Json& j);
std::string export_hom_table(const GammaHomTable& t, const std::string& format);
GammaHomTable parse_hom_table_tsv(const std::string& text);

// Lambda elements as {word name: coefficient}; parsing also takes dense coordinate arrays and 0
Json lambda_element_to_json(const Preproj& l, const Preproj::Vec& x);
Preproj::Vec lambda_element_from_json(const Preproj& l, const Json& j);
Json higgs_to_json(const Quiver& q, const HiggsObject& x);
HiggsObject higgs_from_json(const Quiver& q, const Json& j);

Json braid_word_to_json(const BraidWord& w);
BraidWord braid_word_from_json(const Json& j);
Json garside_to_json(const DynkinType& t, const GarsideForm& f);
GarsideForm garside_from_json(const DynkinType& t, const Json& j);

std::string sha256_hex(const std::string& data);

}
