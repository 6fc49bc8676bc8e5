#include "wdrd/search.hpp"

#include <algorithm>
#include <string>

#include "wdrd/error.hpp"

namespace wdrd {

std::vector<std::vector<int>> abelian_groups(int order) {
  std::vector<std::vector<int>> out;
  std::vector<int> chain;
  // Invariant factor chains d1 | d2 | ... | dk with product `order`.
  const auto recurse = [&](auto&& self, int remaining, int last) -> void {
    if (remaining == 1) {
      out.push_back(chain);
      return;
    }
    for (int d = 2; d <= remaining; ++d) {
      if (remaining % d != 0 || d % last != 0) continue;
      chain.push_back(d);
      self(self, remaining / d, d);
      chain.pop_back();
    }
  };
  if (order >= 2) recurse(recurse, order, 1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int encode(const std::vector<int>& coords, const std::vector<int>& factors) {
  int idx = 0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    idx = idx * factors[i] + coords[i];
  return idx;
}

std::vector<int> decode(int idx, const std::vector<int>& factors) {
  std::vector<int> coords(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    coords[i] = idx % factors[i];
    idx /= factors[i];
  }
  return coords;
}

int negate(int idx, const std::vector<int>& factors) {
  auto coords = decode(idx, factors);
  for (std::size_t i = 0; i < coords.size(); ++i)
    coords[i] = coords[i] ? factors[i] - static_cast<int>(coords[i]) : 0;
  return encode(coords, factors);
}

unsigned long negate_mask(unsigned long mask, const std::vector<int>& factors,
                          int n) {
  unsigned long out = 0;
  for (int e = 1; e < n; ++e)
    if (mask & (1UL << (e - 1))) out |= 1UL << (negate(e, factors) - 1);
  return out;
}

bool quick_strongly_connected(const Digraph& g) {
  const auto reach = [&](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          stack.push_back(y);
        }
    }
    return count == g.n;
  };
  // Cayley digraphs are vertex-transitive, so reachability from one vertex
  // in both orientations decides strong connectivity.
  return reach(g.out) && reach(g.in);
}

std::optional<TeamStructure> try_structure(const Digraph& g) {
  try {
    return multipartite_structure(g);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

void cross_validate_hit(const Digraph& g, const WdrdReport& report) {
  if (!report.partition) return;
  const auto oracle = oracle_p_numbers(g, *report.partition);
  const auto matrix = intersection_tensor(*report.partition);
  const bool oracle_ok = std::holds_alternative<Tensor>(oracle);
  const bool matrix_ok = std::holds_alternative<AssociationScheme>(matrix);
  if (oracle_ok != matrix_ok)
    throw TheoremViolation("tensor routes disagree on scheme verdict");
  if (oracle_ok) {
    if (std::get<Tensor>(oracle) != std::get<AssociationScheme>(matrix).p)
      throw TheoremViolation("tensor routes disagree on intersection numbers");
  } else if (!(std::get<ConstancyFailure>(oracle) ==
               std::get<ConstancyFailure>(matrix))) {
    throw TheoremViolation("tensor routes disagree on the failure witness");
  }
}

}  // namespace

std::vector<SearchHit> enumerate_cayley(const SearchOptions& options) {
  if (options.max_order > options.order_cap)
    throw InputError("search budget exceeded: max order " +
                     std::to_string(options.max_order) + " > cap " +
                     std::to_string(options.order_cap) +
                     " (raise the budget explicitly for larger runs)");
  if (options.max_order > 24)
    throw InputError("enumeration beyond order 24 is not supported");
  std::vector<SearchHit> hits;
  for (int order = 2; order <= options.max_order; ++order) {
    for (const auto& factors : abelian_groups(order)) {
      const unsigned long set_count = 1UL << (order - 1);
      for (unsigned long mask = 1; mask < set_count; ++mask) {
        if (options.reduced &&
            negate_mask(mask, factors, order) < mask)
          continue;
        std::vector<std::vector<int>> connection;
        for (int e = 1; e < order; ++e)
          if (mask & (1UL << (e - 1)))
            connection.push_back(decode(e, factors));
        const Digraph g = cayley(factors, connection);

        if (options.predicate ==
            SearchPredicate::CommutativeMultipartiteWdrd) {
          if (!quick_strongly_connected(g)) continue;
          const auto ts = try_structure(g);
          if (!ts || !ts->all_parts_at_least(2)) continue;
          WdrdReport report = verify_wdrd(g);
          if (!report.is_wdrd || !report.is_commutative) continue;
          if (options.cross_validate) cross_validate_hit(g, report);

          SearchHit hit;
          hit.factors = factors;
          hit.connection = connection;
          hit.mask = mask;
          hit.structure = *ts;
          if (ts->equal_size && *ts->equal_size >= 2) {
            auto params = doubly_regular_params(g);
            if (std::holds_alternative<DoublyRegularParams>(params)) {
              hit.params = std::get<DoublyRegularParams>(params);
              hit.classification = classify_with_params(
                  g, *ts, edge_arc_split(g), *hit.params);
            }
          }
          if (!arc_type_constraint_holds(report, *ts))
            throw TheoremViolation(
                "search hit violates the arc-type constraint: group order " +
                std::to_string(order));
          hit.family = identify(g, report);
          if (!hit.family)
            throw TheoremViolation(
                "search hit matches no construction family: group order " +
                std::to_string(order) + ", mask " + std::to_string(mask));
          hit.report = std::move(report);
          hits.push_back(std::move(hit));
        } else {
          const auto ts = try_structure(g);
          if (!ts || !ts->equal_size || *ts->equal_size < 2) continue;
          auto params = doubly_regular_params(g);
          if (!std::holds_alternative<DoublyRegularParams>(params)) continue;

          SearchHit hit;
          hit.factors = factors;
          hit.connection = connection;
          hit.mask = mask;
          hit.structure = *ts;
          hit.params = std::get<DoublyRegularParams>(params);
          hit.classification =
              classify_with_params(g, *ts, edge_arc_split(g), *hit.params);
          hit.report = verify_wdrd(g);
          if (options.cross_validate && hit.report.strongly_connected)
            cross_validate_hit(g, hit.report);
          if (hit.report.is_wdrd && hit.report.is_commutative &&
              ts->all_parts_at_least(2))
            hit.family = identify(g, hit.report);
          hits.push_back(std::move(hit));
        }
      }
    }
  }
  return hits;
}

std::variant<Tensor, ConstancyFailure> oracle_p_numbers(
    const Digraph& g, const TwoWayPartition& part) {
  const int n = part.n;
  const int c = part.class_count();
  (void)g;
  Tensor tensor(c, std::vector<std::vector<long long>>(
                       c, std::vector<long long>(c, 0)));
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      for (int l = 0; l < c; ++l) {
        const auto& pairs = part.classes[l];
        long long ref = -1;
        Arc ref_pair{0, 0};
        for (const auto& [x, y] : pairs) {
          long long count = 0;
          for (int z = 0; z < n; ++z)
            if (part.class_of(x, z) == i && part.class_of(z, y) == j) ++count;
          if (ref < 0) {
            ref = count;
            ref_pair = {x, y};
          } else if (count != ref) {
            ConstancyFailure f;
            f.i = i;
            f.j = j;
            f.l = l;
            f.label_i = part.labels[i];
            f.label_j = part.labels[j];
            f.label_l = part.labels[l];
            f.first_pair = ref_pair;
            f.second_pair = {x, y};
            f.first_count = ref;
            f.second_count = count;
            return f;
          }
        }
        tensor[i][j][l] = ref;
      }
  return tensor;
}

}  // namespace wdrd
