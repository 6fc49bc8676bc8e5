#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wdrd/digraph.hpp"
#include "wdrd/verify.hpp"

namespace wdrd {

// Catalog of named base digraphs. Fixed names: c3, c4, cay_z4_12, cay_z6_12,
// paley3, paley7, paley11; parametric: paley<q> for primes q ≡ 3 (mod 4) and
// complete<m> for m >= 2.
struct BuiltinDigraph {
  std::string name;
  Digraph digraph;
  WdrdReport report;
};

BuiltinDigraph builtin(const std::string& name);
std::vector<std::string> builtin_names();

// The five construction families. Each constructor validates its base input,
// names the failed predicate in the error message, and re-verifies that the
// output is a commutative weakly distance-regular digraph (raising
// TheoremViolation otherwise).
Digraph family1(int n);                          // n-coclique ext of cay_z6_12
Digraph family2(int l, const Digraph& sigma);    // l >= 2; semicomplete
                                                 // commutative WDRD base of
                                                 // girth 2 or 3
Digraph family3(int n, const Digraph& sigma);    // n-coclique ext of sigma∘C4;
                                                 // semicomplete WDRD base of
                                                 // girth 3
Digraph family4(int n, const Digraph& d);        // n-coclique ext of a Type II
                                                 // team tournament with the
                                                 // closed-form parameters
Digraph family5(const Digraph& d);               // doubly regular Type II team
                                                 // digraph that is itself a
                                                 // commutative WDRD

struct FamilyMatch {
  int family = 0;
  int extension = 1;      // coclique multiplicity (n or l)
  Digraph base;           // recovered base digraph
  std::string base_name;  // catalog name when recognized, else empty
  std::optional<std::pair<int, int>> team;  // (parts, part size) if relevant
  std::vector<int> iso_map;  // reconstruction vertex -> input vertex
};

// Routes on the arc-type set and returns the first verified reconstruction;
// nullopt (no match) is a theorem-violation finding for the caller to raise.
// Requires a semicomplete multipartite (all part sizes >= 2) commutative
// WDRD.
std::optional<FamilyMatch> identify(const Digraph& g);
std::optional<FamilyMatch> identify(const Digraph& g,
                                    const WdrdReport& report);

// Rebuilds the digraph a match describes, for round-trip checks.
Digraph reconstruct(const FamilyMatch& match);

}  // namespace wdrd
