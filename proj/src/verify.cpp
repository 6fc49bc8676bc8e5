#include "wdrd/verify.hpp"

#include <algorithm>
#include <set>

#include "wdrd/error.hpp"

namespace wdrd {

std::vector<int> arc_type_set(const TwoWayPartition& partition) {
  std::vector<int> t;
  for (const auto& [a, b] : partition.labels)
    if (a == 1) t.push_back(b + 1);
  std::sort(t.begin(), t.end());
  return t;
}

WdrdReport verify_wdrd(const Digraph& g) {
  WdrdReport report;
  TwoWayPartition partition;
  try {
    partition = two_way_partition(g);
  } catch (const NotStronglyConnectedError& e) {
    report.unreachable_witness = Arc{e.from, e.to};
    return report;
  }
  report.strongly_connected = true;
  report.t_set = arc_type_set(partition);

  SchemeReport sr = verify_scheme(partition);
  report.is_scheme = sr.is_scheme;
  report.failure = sr.failure_witness;
  report.t_set_informational = !sr.is_scheme;
  if (sr.is_scheme) {
    report.is_commutative = sr.is_commutative;
    report.is_nonsymmetric = !sr.is_symmetric;
    report.is_wdrd = report.strongly_connected && report.is_scheme &&
                     report.is_nonsymmetric;
  }

  report.classes.reserve(partition.class_count());
  for (int i = 0; i < partition.class_count(); ++i) {
    ClassSummary cs;
    cs.label = partition.labels[i];
    cs.size = static_cast<long long>(partition.classes[i].size());
    if (sr.scheme) cs.valency = sr.scheme->valencies[i];
    report.classes.push_back(cs);
  }
  report.partition = std::move(partition);
  report.scheme = std::move(sr.scheme);
  return report;
}

bool arc_type_constraint_holds(const WdrdReport& report,
                               const TeamStructure& structure) {
  if (!report.is_wdrd || !report.is_commutative)
    throw InputError("arc-type constraint requires a commutative weakly "
                     "distance-regular digraph");
  if (!structure.all_parts_at_least(2))
    throw InputError("arc-type constraint requires all part sizes >= 2");
  static const std::set<std::vector<int>> allowed{
      {3}, {4}, {3, 4}, {2, 3}};
  return allowed.count(report.t_set) > 0;
}

}  // namespace wdrd
