#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "wdrd/digraph.hpp"
#include "wdrd/family.hpp"
#include "wdrd/scheme.hpp"
#include "wdrd/search.hpp"
#include "wdrd/team.hpp"
#include "wdrd/verify.hpp"

namespace wdrd {

inline constexpr const char* kToolVersion = "0.1.0";

using json = nlohmann::json;

// Canonical digraph object: {"n": int, "arcs": [[u,v], ...]} with the arc
// list sorted. Matrix text: first line n, then n rows of n characters 0/1.
json to_json(const Digraph& g);
Digraph digraph_from_json(const json& j);
std::string to_matrix_text(const Digraph& g);
Digraph digraph_from_matrix_text(const std::string& text);

// Sniffs JSON (leading '{') vs matrix text unless format is "json"/"matrix".
Digraph read_digraph(std::istream& in, const std::string& format = "auto");

json to_json(const TeamStructure& ts);
json to_json(const ConstancyFailure& f);
// Scheme object: {"n", "classes", "converse", "tensor", "valencies"}.
json to_json(const AssociationScheme& s);
json to_json(const WdrdReport& r);
json to_json(const IdentityViolation& v);
json to_json(const RegularityFailure& f);
json to_json(const DoublyRegularParams& p);
json to_json(const TypeClassification& c);
json to_json(const FamilyMatch& m);
json to_json(const SearchHit& h);

}  // namespace wdrd
