#include "wdrd/family.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <variant>

#include "wdrd/error.hpp"
#include "wdrd/team.hpp"

namespace wdrd {

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Digraph paley(int q) {
  if (!is_prime(q))
    throw InputError("paley tournament needs a prime modulus, got " +
                     std::to_string(q));
  if (q % 4 != 3)
    throw InputError("paley(" + std::to_string(q) +
                     "): quadratic residues are symmetric unless q ≡ 3 (mod "
                     "4), so the construction gives a graph, not a "
                     "tournament");
  std::vector<int> residues;
  for (int a = 1; a < q; ++a) {
    const int sq = static_cast<int>((static_cast<long long>(a) * a) % q);
    residues.push_back(sq);
  }
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()),
                 residues.end());
  return cayley(q, residues);
}

std::optional<int> parse_suffix(const std::string& name,
                                const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix))
    return std::nullopt;
  const std::string rest = name.substr(prefix.size());
  if (!std::all_of(rest.begin(), rest.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  if (rest.size() > 6) throw InputError("builtin parameter too large");
  return std::stoi(rest);
}

Digraph builtin_digraph(const std::string& name) {
  if (name == "c3") return cayley(3, {1});
  if (name == "c4") return cayley(4, {1});
  if (name == "cay_z4_12") return cayley(4, {1, 2});
  if (name == "cay_z6_12") return cayley(6, {1, 2});
  if (const auto q = parse_suffix(name, "paley")) return paley(*q);
  if (const auto m = parse_suffix(name, "complete")) {
    if (*m < 2) throw InputError("complete digraph needs >= 2 vertices");
    return complete_digraph(*m);
  }
  std::string known;
  for (const auto& n : builtin_names()) known += " " + n;
  throw InputError("unknown builtin '" + name + "'; known:" + known +
                   " paley<q> complete<m>");
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"c3",     "c4",     "cay_z4_12", "cay_z6_12",
          "paley3", "paley7", "paley11",   "complete3"};
}

BuiltinDigraph builtin(const std::string& name) {
  BuiltinDigraph b;
  b.name = name;
  b.digraph = builtin_digraph(name);
  b.report = verify_wdrd(b.digraph);
  return b;
}

namespace {

Digraph reverify(Digraph g, const std::string& what) {
  const WdrdReport report = verify_wdrd(g);
  if (!report.is_wdrd || !report.is_commutative)
    throw TheoremViolation(what + " failed re-verification as a commutative "
                                  "weakly distance-regular digraph");
  return g;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

}  // namespace

Digraph family1(int n) {
  require(n >= 1, "family 1: n >= 1 required");
  return reverify(coclique_extension(builtin_digraph("cay_z6_12"), n),
                  "family 1 output");
}

Digraph family2(int l, const Digraph& sigma) {
  require(l >= 2, "family 2: l >= 2 required");
  const TeamStructure ts = multipartite_structure(sigma);
  require(ts.semicomplete, "family 2: base is not semicomplete");
  const WdrdReport report = verify_wdrd(sigma);
  require(report.is_wdrd,
          "family 2: base is not a weakly distance-regular digraph");
  require(report.is_commutative, "family 2: base is not commutative");
  const int gi = girth(sigma);
  require(gi == 2 || gi == 3, "family 2: base girth must be 2 or 3, got " +
                                  std::to_string(gi));
  return reverify(coclique_extension(sigma, l), "family 2 output");
}

Digraph family3(int n, const Digraph& sigma) {
  require(n >= 1, "family 3: n >= 1 required");
  const TeamStructure ts = multipartite_structure(sigma);
  require(ts.semicomplete, "family 3: base is not semicomplete");
  const WdrdReport report = verify_wdrd(sigma);
  require(report.is_wdrd,
          "family 3: base is not a weakly distance-regular digraph");
  require(girth(sigma) == 3, "family 3: base girth must be 3");
  const Digraph core = lexicographic_product(sigma, builtin_digraph("c4"));
  return reverify(coclique_extension(core, n), "family 3 output");
}

Digraph family4(int n, const Digraph& d) {
  require(n >= 1, "family 4: n >= 1 required");
  auto result = tournament_params(d);
  if (std::holds_alternative<RegularityFailure>(result))
    throw InputError("family 4: base is not a doubly regular team "
                     "tournament: " +
                     std::get<RegularityFailure>(result).describe());
  const auto& tp = std::get<TournamentParams>(result);
  require(is_type2_tournament(d), "family 4: base is not of Type II");
  const auto expected = type2_parameters(tp.m, tp.r);
  require(tp.alpha == expected[0] && tp.beta == expected[1] &&
              tp.gamma == expected[2],
          "family 4: base parameters (" + std::to_string(tp.alpha) + "," +
              std::to_string(tp.beta) + "," + std::to_string(tp.gamma) +
              ") differ from the closed form (" + std::to_string(expected[0]) +
              "," + std::to_string(expected[1]) + "," +
              std::to_string(expected[2]) + ")");
  return reverify(coclique_extension(d, n), "family 4 output");
}

Digraph family5(const Digraph& d) {
  auto result = doubly_regular_params(d);
  if (std::holds_alternative<RegularityFailure>(result))
    throw InputError("family 5: digraph is not doubly regular: " +
                     std::get<RegularityFailure>(result).describe());
  const TeamStructure ts = multipartite_structure(d);
  const EdgeArcSplit split = edge_arc_split(d);
  const TypeClassification cls = classify_with_params(
      d, ts, split, std::get<DoublyRegularParams>(result));
  require(cls.verdict == TeamType::TypeII,
          std::string("family 5: digraph has ") + team_type_name(cls.verdict) +
              ", not Type-II");
  const WdrdReport report = verify_wdrd(d);
  require(report.is_wdrd,
          "family 5: digraph is not a weakly distance-regular digraph");
  require(report.is_commutative, "family 5: digraph is not commutative");
  return d;
}

Digraph reconstruct(const FamilyMatch& match) {
  switch (match.family) {
    case 1:
      return family1(match.extension);
    case 2:
      return family2(match.extension, match.base);
    case 3:
      return family3(match.extension, match.base);
    case 4:
      return family4(match.extension, match.base);
    case 5:
      return family5(match.base);
    default:
      throw InputError("unknown family " + std::to_string(match.family));
  }
}

namespace {

// Quotient of g by the closed subset {(0,0),(s,s)} when the (s,s) class is
// present; otherwise g itself with singleton fibers.
struct Peeled {
  Digraph core;
  int multiplicity = 1;
  std::vector<std::vector<int>> fibers;
};

std::optional<Peeled> peel_uniform_fiber(const Digraph& g,
                                         const TwoWayPartition& partition,
                                         const AssociationScheme& scheme,
                                         int s) {
  Peeled peeled;
  const int idx = scheme.index_of(s, s);
  if (idx < 0) {
    peeled.core = g;
    peeled.multiplicity = 1;
    peeled.fibers.resize(g.n);
    for (int v = 0; v < g.n; ++v) peeled.fibers[v] = {v};
    return peeled;
  }
  const std::vector<int> f{0, idx};
  if (!is_closed(scheme, f)) return std::nullopt;
  const ClosedSubset closed{f};
  peeled.fibers = quotient_classes(partition, closed);
  const std::size_t size = peeled.fibers.front().size();
  for (const auto& fiber : peeled.fibers)
    if (fiber.size() != size) return std::nullopt;
  peeled.multiplicity = static_cast<int>(size);
  peeled.core = quotient(g, partition, closed);
  return peeled;
}

// Witness map for g ≅ ext(base, mult) with fiber p holding the vertices of
// base vertex base_to_fiber[p].
std::optional<std::vector<int>> extension_witness(
    const Digraph& g, const Digraph& base, int mult,
    const std::vector<std::vector<int>>& fibers,
    const std::vector<int>& base_to_fiber) {
  const Digraph recon = coclique_extension(base, mult);
  std::vector<int> map(g.n);
  for (int p = 0; p < base.n; ++p)
    for (int s = 0; s < mult; ++s)
      map[p * mult + s] = fibers[base_to_fiber[p]][s];
  if (is_isomorphism_map(recon, g, map)) return map;
  return is_isomorphic(recon, g);
}

std::string recognize_base(const Digraph& base) {
  for (const auto& name : builtin_names()) {
    const Digraph candidate = builtin(name).digraph;
    if (candidate.n != base.n || candidate.arc_count() != base.arc_count())
      continue;
    if (is_isomorphic(candidate, base)) return name;
  }
  return "";
}

std::vector<int> identity_map(int n) {
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) map[i] = i;
  return map;
}

bool is_wdrd_with(const Digraph& g, bool need_commutative, int need_girth) {
  const WdrdReport report = verify_wdrd(g);
  if (!report.is_wdrd) return false;
  if (need_commutative && !report.is_commutative) return false;
  if (need_girth > 0 && girth(g) != need_girth) return false;
  return true;
}

bool semicomplete_base(const Digraph& g) {
  if (g.n < 2) return false;
  try {
    return multipartite_structure(g).semicomplete;
  } catch (const InputError&) {
    return false;
  }
}

// Family 2 attempt: peel the (s,s) class (s = 2 for girth-2 bases, 3 for
// girth-3 bases) and validate the quotient as a semicomplete base.
std::optional<FamilyMatch> try_family2(const Digraph& g,
                                       const TwoWayPartition& partition,
                                       const AssociationScheme& scheme,
                                       int s, int base_girth) {
  const auto peeled = peel_uniform_fiber(g, partition, scheme, s);
  if (!peeled || peeled->multiplicity < 2) return std::nullopt;
  if (!semicomplete_base(peeled->core)) return std::nullopt;
  if (!is_wdrd_with(peeled->core, /*need_commutative=*/true, base_girth))
    return std::nullopt;
  const auto map = extension_witness(g, peeled->core, peeled->multiplicity,
                                     peeled->fibers,
                                     identity_map(peeled->core.n));
  if (!map) return std::nullopt;
  FamilyMatch match;
  match.family = 2;
  match.extension = peeled->multiplicity;
  match.base = peeled->core;
  match.base_name = recognize_base(match.base);
  match.iso_map = *map;
  return match;
}

std::optional<FamilyMatch> try_family4(const Digraph& g,
                                       const TwoWayPartition& partition,
                                       const AssociationScheme& scheme,
                                       int s) {
  const auto peeled = peel_uniform_fiber(g, partition, scheme, s);
  if (!peeled) return std::nullopt;
  const Digraph& base = peeled->core;
  auto result = tournament_params(base);
  if (std::holds_alternative<RegularityFailure>(result)) return std::nullopt;
  const auto& tp = std::get<TournamentParams>(result);
  if (!is_type2_tournament(base)) return std::nullopt;
  try {
    const auto expected = type2_parameters(tp.m, tp.r);
    if (tp.alpha != expected[0] || tp.beta != expected[1] ||
        tp.gamma != expected[2])
      return std::nullopt;
  } catch (const InputError&) {
    return std::nullopt;
  }
  const auto map = extension_witness(g, base, peeled->multiplicity,
                                     peeled->fibers, identity_map(base.n));
  if (!map) return std::nullopt;
  FamilyMatch match;
  match.family = 4;
  match.extension = peeled->multiplicity;
  match.base = base;
  match.base_name = recognize_base(base);
  match.team = std::make_pair(tp.m, tp.r);
  match.iso_map = *map;
  return match;
}

std::optional<FamilyMatch> try_family5(const Digraph& g,
                                       const TeamStructure& ts) {
  auto result = doubly_regular_params(g);
  if (std::holds_alternative<RegularityFailure>(result)) return std::nullopt;
  const auto& params = std::get<DoublyRegularParams>(result);
  const EdgeArcSplit split = edge_arc_split(g);
  const TypeClassification cls = classify_with_params(g, ts, split, params);
  if (cls.verdict != TeamType::TypeII) return std::nullopt;
  FamilyMatch match;
  match.family = 5;
  match.extension = 1;
  match.base = g;
  match.team = std::make_pair(params.m, params.r);
  match.iso_map = identity_map(g.n);
  return match;
}

std::optional<FamilyMatch> try_family1(const Digraph& g,
                                       const TwoWayPartition& partition,
                                       const AssociationScheme& scheme) {
  const auto peeled = peel_uniform_fiber(g, partition, scheme, 3);
  if (!peeled) return std::nullopt;
  const Digraph cay = builtin_digraph("cay_z6_12");
  const auto psi = is_isomorphic(cay, peeled->core);
  if (!psi) return std::nullopt;
  const auto map = extension_witness(g, cay, peeled->multiplicity,
                                     peeled->fibers, *psi);
  if (!map) return std::nullopt;
  FamilyMatch match;
  match.family = 1;
  match.extension = peeled->multiplicity;
  match.base = cay;
  match.base_name = "cay_z6_12";
  match.iso_map = *map;
  return match;
}

// Orders each fiber of the inner closed subset along its unique chain of
// (1,3) arcs, giving the 4-circuit alignment of the base product.
std::optional<std::vector<int>> circuit_order(const TwoWayPartition& part,
                                              const std::vector<int>& fiber) {
  const int start = *std::min_element(fiber.begin(), fiber.end());
  std::vector<int> order{start};
  int current = start;
  for (std::size_t step = 1; step < fiber.size(); ++step) {
    int next = -1;
    for (int y : fiber) {
      if (y == current) continue;
      if (part.label_of(current, y) == std::make_pair(1, 3)) {
        if (next >= 0) return std::nullopt;
        next = y;
      }
    }
    if (next < 0 || next == start) return std::nullopt;
    order.push_back(next);
    current = next;
  }
  return order;
}

std::optional<FamilyMatch> try_family3(const Digraph& g,
                                       const TwoWayPartition& partition,
                                       const AssociationScheme& scheme) {
  const auto peeled = peel_uniform_fiber(g, partition, scheme, 3);
  if (!peeled) return std::nullopt;
  const Digraph& core = peeled->core;

  TwoWayPartition core_part;
  try {
    core_part = two_way_partition(core);
  } catch (const NotStronglyConnectedError&) {
    return std::nullopt;
  }
  auto tensor = intersection_tensor(core_part);
  if (std::holds_alternative<ConstancyFailure>(tensor)) return std::nullopt;
  const auto& core_scheme = std::get<AssociationScheme>(tensor);
  const int i13 = core_scheme.index_of(1, 3);
  if (i13 < 0) return std::nullopt;
  const ClosedSubset f = closure(core_scheme, {i13});
  std::vector<std::pair<int, int>> f_labels;
  for (int idx : f.indices) f_labels.push_back(core_scheme.labels[idx]);
  const std::vector<std::pair<int, int>> expected{
      {0, 0}, {1, 3}, {2, 2}, {3, 1}};
  if (f_labels != expected) return std::nullopt;

  const auto inner_fibers = quotient_classes(core_part, f);
  for (const auto& fiber : inner_fibers)
    if (fiber.size() != 4) return std::nullopt;
  const Digraph sigma = quotient(core, core_part, f);
  if (!semicomplete_base(sigma)) return std::nullopt;
  if (!is_wdrd_with(sigma, /*need_commutative=*/false, /*need_girth=*/3))
    return std::nullopt;

  // Candidate witness: align each inner fiber along its (1,3) circuit, then
  // lift through the outer fibers.
  const Digraph base_core =
      lexicographic_product(sigma, builtin_digraph("c4"));
  const Digraph recon = coclique_extension(base_core, peeled->multiplicity);
  std::vector<int> core_map(core.n, -1);
  bool aligned = true;
  for (std::size_t p = 0; p < inner_fibers.size() && aligned; ++p) {
    const auto order = circuit_order(core_part, inner_fibers[p]);
    if (!order) {
      aligned = false;
      break;
    }
    for (int u = 0; u < 4; ++u)
      core_map[static_cast<int>(p) * 4 + u] = (*order)[u];
  }
  std::optional<std::vector<int>> map;
  if (aligned) {
    std::vector<int> candidate(g.n);
    for (int q = 0; q < base_core.n; ++q)
      for (int s = 0; s < peeled->multiplicity; ++s)
        candidate[q * peeled->multiplicity + s] =
            peeled->fibers[core_map[q]][s];
    if (is_isomorphism_map(recon, g, candidate)) map = candidate;
  }
  if (!map) map = is_isomorphic(recon, g);
  if (!map) return std::nullopt;

  FamilyMatch match;
  match.family = 3;
  match.extension = peeled->multiplicity;
  match.base = sigma;
  match.base_name = recognize_base(sigma);
  match.iso_map = *map;
  return match;
}

}  // namespace

namespace {

// A failed structural precondition inside one family attempt means that
// family does not match; it must not abort the routing.
std::optional<FamilyMatch> attempt(
    const std::function<std::optional<FamilyMatch>()>& body) {
  try {
    return body();
  } catch (const InputError&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<FamilyMatch> identify(const Digraph& g,
                                    const WdrdReport& report) {
  if (!report.is_wdrd || !report.is_commutative)
    throw InputError("identify requires a commutative weakly "
                     "distance-regular digraph");
  const TeamStructure ts = multipartite_structure(g);
  if (!ts.all_parts_at_least(2))
    throw InputError("identify requires all part sizes >= 2");
  if (!ts.equal_size)
    throw TheoremViolation("multipartite commutative weakly distance-regular "
                           "digraph with unequal part sizes");
  const TwoWayPartition& partition = *report.partition;
  const AssociationScheme& scheme = *report.scheme;
  const std::vector<int>& t = report.t_set;

  if (t == std::vector<int>{2, 3}) {
    if (auto match = attempt([&] { return try_family5(g, ts); })) return match;
    return attempt(
        [&] { return try_family2(g, partition, scheme, 2, /*girth*/ 2); });
  }
  if (t == std::vector<int>{3}) {
    if (scheme.index_of(2, 2) < 0) {
      if (auto match = attempt(
              [&] { return try_family2(g, partition, scheme, 3, /*girth*/ 3); }))
        return match;
    }
    return attempt([&] { return try_family4(g, partition, scheme, 3); });
  }
  if (t == std::vector<int>{4}) {
    return attempt([&] { return try_family4(g, partition, scheme, 4); });
  }
  if (t == std::vector<int>{3, 4}) {
    if (auto match = attempt([&] { return try_family1(g, partition, scheme); }))
      return match;
    return attempt([&] { return try_family3(g, partition, scheme); });
  }
  return std::nullopt;
}

std::optional<FamilyMatch> identify(const Digraph& g) {
  return identify(g, verify_wdrd(g));
}

}  // namespace wdrd
