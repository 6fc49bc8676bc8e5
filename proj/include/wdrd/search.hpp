#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "wdrd/digraph.hpp"
#include "wdrd/family.hpp"
#include "wdrd/scheme.hpp"
#include "wdrd/team.hpp"
#include "wdrd/verify.hpp"

namespace wdrd {

enum class SearchPredicate {
  // Strongly connected, semicomplete multipartite with all part sizes >= 2,
  // commutative weakly distance-regular.
  CommutativeMultipartiteWdrd,
  // Team semicomplete multipartite digraph whose coefficient table exists.
  DoublyRegularTeam,
};

struct SearchOptions {
  int max_order = 12;
  SearchPredicate predicate = SearchPredicate::CommutativeMultipartiteWdrd;
  bool reduced = false;         // prune S when -S enumerates first
  bool cross_validate = false;  // triple-loop oracle vs matrix tensor per hit
  int order_cap = 16;           // guard; raise deliberately for larger runs
};

struct SearchHit {
  std::vector<int> factors;
  std::vector<std::vector<int>> connection;  // element tuples, sorted
  unsigned long mask = 0;                    // sorted-bitmask encoding
  WdrdReport report;
  TeamStructure structure;
  std::optional<DoublyRegularParams> params;
  std::optional<TypeClassification> classification;
  std::optional<FamilyMatch> family;
};

// Iterates all abelian groups of order <= max_order (invariant-factor
// decompositions) and all nonempty connection sets, in canonical order
// (group order, factor list, connection bitmask). Raises TheoremViolation
// when a default-predicate hit fails the arc-type constraint or matches no
// family. Throws InputError when max_order exceeds the cap.
std::vector<SearchHit> enumerate_cayley(const SearchOptions& options);

// All invariant-factor sequences d1 | d2 | ... with product n, each >= 2.
std::vector<std::vector<int>> abelian_groups(int order);

using Tensor = std::vector<std::vector<std::vector<long long>>>;

// Independent intersection-number oracle: direct triple loops over
// (x, z, y), no matrix algebra. Identical output contract and witness scan
// order as intersection_tensor.
std::variant<Tensor, ConstancyFailure> oracle_p_numbers(
    const Digraph& g, const TwoWayPartition& partition);

}  // namespace wdrd
