#pragma once

#include <optional>
#include <vector>

#include "wdrd/digraph.hpp"
#include "wdrd/scheme.hpp"

namespace wdrd {

struct ClassSummary {
  std::pair<int, int> label{0, 0};
  long long size = 0;
  long long valency = -1;  // -1 when the scheme check failed
};

struct WdrdReport {
  bool strongly_connected = false;
  bool is_scheme = false;
  bool is_nonsymmetric = false;
  bool is_wdrd = false;  // strongly_connected && is_scheme && is_nonsymmetric
  bool is_commutative = false;
  std::vector<int> t_set;  // sorted
  bool t_set_informational = false;  // T computed but the scheme check failed
  std::vector<ClassSummary> classes;
  std::optional<Arc> unreachable_witness;
  std::optional<ConstancyFailure> failure;
  // Carried for downstream use; absent when not strongly connected.
  std::optional<TwoWayPartition> partition;
  std::optional<AssociationScheme> scheme;
};

WdrdReport verify_wdrd(const Digraph& g);

// {q | class (1,q-1) is nonempty}.
std::vector<int> arc_type_set(const TwoWayPartition& partition);

// True iff the arc-type set is one of {3}, {4}, {3,4}, {2,3}. Requires a
// commutative WDRD report and a team structure with all part sizes >= 2.
bool arc_type_constraint_holds(const WdrdReport& report,
                               const TeamStructure& structure);

}  // namespace wdrd
