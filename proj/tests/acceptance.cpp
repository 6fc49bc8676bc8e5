// Acceptance suite: runs each shipped criterion at its stated bound and
// prints one pass/fail line per criterion. Exit code is the failure count.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "support.hpp"
#include "wdrd/digraph.hpp"
#include "wdrd/error.hpp"
#include "wdrd/family.hpp"
#include "wdrd/scheme.hpp"
#include "wdrd/search.hpp"
#include "wdrd/team.hpp"
#include "wdrd/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

struct Check {
  std::ostringstream log;
  bool ok = true;

  void require(bool condition, const std::string& message) {
    if (!condition) {
      ok = false;
      if (log.tellp() > 0) log << "; ";
      log << message;
    }
  }
};

void criterion(int number, const std::string& label, double limit_seconds,
               const std::function<void(Check&)>& body) {
  Check check;
  const auto start = Clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.require(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0)
    check.require(seconds <= limit_seconds,
                  "runtime " + std::to_string(seconds) + "s exceeds " +
                      std::to_string(limit_seconds) + "s");
  if (!check.ok) ++failures;
  std::printf("criterion %2d: %s (%.2fs) %s%s%s\n", number,
              check.ok ? "PASS" : "FAIL", seconds, label.c_str(),
              check.ok ? "" : " -- ", check.ok ? "" : check.log.str().c_str());
  std::fflush(stdout);
}

// The order-12 default-predicate search run is shared between criteria 7
// and 8; its duration is recorded at first use.
double search_seconds = -1.0;
const std::vector<wdrd::SearchHit>& default_search_hits() {
  static std::vector<wdrd::SearchHit> hits = [] {
    wdrd::SearchOptions opts;
    opts.max_order = 12;
    opts.cross_validate = true;
    const auto start = Clock::now();
    auto result = wdrd::enumerate_cayley(opts);
    search_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return result;
  }();
  return hits;
}

std::set<std::pair<int, int>> label_set(const wdrd::Digraph& g) {
  const auto part = wdrd::two_way_partition(g);
  return {part.labels.begin(), part.labels.end()};
}

}  // namespace

int main() {
  using namespace wdrd;

  criterion(1, "Cay(Z6,{1,2}) verification and identification", 1.0,
            [](Check& c) {
              const Digraph g = cayley(6, {1, 2});
              const auto report = verify_wdrd(g);
              c.require(report.is_wdrd && report.is_commutative,
                        "expected a commutative WDRD");
              c.require(g.n == 6, "expected 6 vertices");
              c.require(report.classes.size() == 6, "expected six classes");
              for (const auto& cs : report.classes)
                c.require(cs.valency == 1, "expected valency 1 classes");
              const auto match = identify(g, report);
              c.require(match.has_value(), "expected a family match");
              if (match) {
                c.require(match->family == 1, "expected family 1");
                c.require(match->extension == 1, "expected n = 1");
              }
            });

  criterion(2, "C4 tournament parameters and Type II classification", 1.0,
            [](Check& c) {
              const Digraph g = cayley(4, {1});
              const auto tp = tournament_params(g);
              c.require(std::holds_alternative<TournamentParams>(tp),
                        "tournament parameters must exist");
              if (std::holds_alternative<TournamentParams>(tp)) {
                const auto& t = std::get<TournamentParams>(tp);
                c.require(t.alpha == 0 && t.beta == 0 && t.gamma == 1,
                          "expected parameters (0,0,1)");
                const auto formula = type2_parameters(2, 2);
                c.require(t.alpha == formula[0] && t.beta == formula[1] &&
                              t.gamma == formula[2],
                          "parameters must match the closed form at (2,2)");
              }
              c.require(is_type2_tournament(g), "expected the Type II check");
              const auto cls = classify_type(g);
              c.require(cls.verdict == TeamType::TypeII, "expected Type II");
              c.require(cls.delta == 0, "expected delta 0");
              c.require(!cls.c.empty() && cls.c[0][1] == 1 && cls.c[1][0] == 1,
                        "expected c = 1");
            });

  criterion(3, "C3 x K̄2 classes and quotient round-trip", 1.0, [](Check& c) {
    const Digraph g = family2(2, builtin("c3").digraph);
    const auto part = two_way_partition(g);
    const std::vector<std::pair<int, int>> labels{
        {0, 0}, {1, 2}, {2, 1}, {3, 3}};
    c.require(part.labels == labels, "unexpected two-way classes");
    auto tensor = intersection_tensor(part);
    c.require(std::holds_alternative<AssociationScheme>(tensor),
              "expected a scheme");
    if (std::holds_alternative<AssociationScheme>(tensor)) {
      const auto& s = std::get<AssociationScheme>(tensor);
      c.require(s.valencies[s.index_of(1, 2)] == 2, "expected k_{1,2} = 2");
      c.require(s.valencies[s.index_of(3, 3)] == 1, "expected k_{3,3} = 1");
      const ClosedSubset f{{0, s.index_of(3, 3)}};
      const Digraph q = quotient(g, part, f);
      c.require(is_isomorphic(q, cayley(3, {1})).has_value(),
                "quotient must be the directed triangle");
      c.require(is_isomorphic(coclique_extension(q, 2), g).has_value(),
                "extension of the quotient must rebuild the digraph");
    }
  });

  criterion(4, "paley7 x C4 verification and class-label union", 5.0,
            [](Check& c) {
              const Digraph sigma = builtin("paley7").digraph;
              const Digraph g = family3(1, sigma);
              c.require(g.n == 28, "expected 28 vertices");
              const auto report = verify_wdrd(g);
              c.require(report.is_wdrd, "expected a WDRD");
              std::set<std::pair<int, int>> expected = label_set(sigma);
              for (const auto& l : label_set(builtin("c4").digraph))
                expected.insert(l);
              c.require(label_set(g) == expected,
                        "two-way classes must be the union of the factors'");
            });

  criterion(5, "ext(Cay(Z4,{1,2}),2) coefficients, Type I, family 2", 1.0,
            [](Check& c) {
              const Digraph g = coclique_extension(cayley(4, {1, 2}), 2);
              const auto result = doubly_regular_params(g);
              c.require(std::holds_alternative<DoublyRegularParams>(result),
                        "expected a doubly regular digraph");
              if (std::holds_alternative<DoublyRegularParams>(result)) {
                const auto& p = std::get<DoublyRegularParams>(result);
                c.require(p.t == 2, "expected t = 2");
                c.require(p.beta[1] == 2, "expected beta_1 = 2");
                c.require(p.gamma[2] == 2, "expected gamma_2 = 2");
                c.require(p.eta[0] == 2, "expected eta_0 = 2");
                long long other = p.alpha[0] + p.alpha[1] + p.alpha[2] +
                                  p.beta[0] + p.beta[2] + p.gamma[0] +
                                  p.gamma[1] + p.eta[1] + p.eta[2];
                c.require(other == 0, "all other coefficients must vanish");
                const auto cls = classify_type(g);
                c.require(cls.verdict == TeamType::TypeI, "expected Type I");
                c.require(cls.delta == 2 && p.r == 2,
                          "expected delta = 2 = r");
              }
              const auto match = identify(g);
              c.require(match.has_value(), "expected a family match");
              if (match) {
                c.require(match->family == 2, "expected family 2");
                c.require(match->extension == 2, "expected l = 2");
                c.require(multipartite_structure(match->base).semicomplete,
                          "base must be semicomplete");
                c.require(girth(match->base) == 2, "base must have girth 2");
              }
            });

  criterion(6, "tensor route equals the triple-loop oracle on the corpus",
            30.0, [](Check& c) {
              for (const auto& [name, g] : testsupport::corpus_up_to(32)) {
                TwoWayPartition part;
                try {
                  part = two_way_partition(g);
                } catch (const NotStronglyConnectedError&) {
                  continue;
                }
                const auto oracle = oracle_p_numbers(g, part);
                const auto matrix = intersection_tensor(part);
                const bool oracle_ok = std::holds_alternative<Tensor>(oracle);
                const bool matrix_ok =
                    std::holds_alternative<AssociationScheme>(matrix);
                c.require(oracle_ok == matrix_ok, name + ": verdicts differ");
                if (oracle_ok && matrix_ok)
                  c.require(std::get<Tensor>(oracle) ==
                                std::get<AssociationScheme>(matrix).p,
                            name + ": tensors differ");
                if (!oracle_ok && !matrix_ok)
                  c.require(std::get<ConstancyFailure>(oracle) ==
                                std::get<ConstancyFailure>(matrix),
                            name + ": witnesses differ");
              }
            });

  criterion(7, "intersection identities on corpus schemes and search hits",
            0.0, [](Check& c) {
              int checked = 0;
              for (const auto& [name, g] : testsupport::corpus_up_to(48)) {
                WdrdReport report;
                try {
                  report = verify_wdrd(g);
                } catch (const NotStronglyConnectedError&) {
                  continue;
                }
                if (!report.scheme) continue;
                c.require(intersection_identities(*report.scheme).empty(),
                          name + ": identity violation");
                ++checked;
              }
              for (const auto& hit : default_search_hits()) {
                if (!hit.report.scheme) continue;
                c.require(intersection_identities(*hit.report.scheme).empty(),
                          "search hit identity violation");
                ++checked;
              }
              c.require(checked > 10, "too few schemes checked");
            });

  criterion(8, "order-12 search: hits verified, constrained, identified",
            300.0, [](Check& c) {
              const auto& hits = default_search_hits();
              c.require(search_seconds >= 0 && search_seconds < 300.0,
                        "enumeration exceeded five minutes");
              c.require(!hits.empty(), "hit list must be nonempty");
              const auto has = [&](std::vector<int> factors,
                                   unsigned long mask) {
                for (const auto& hit : hits)
                  if (hit.factors == factors && hit.mask == mask) return true;
                return false;
              };
              c.require(has({4}, 1UL), "C4 missing");
              c.require(has({4}, 4UL), "C4 converse missing");
              c.require(has({6}, 3UL), "Cay(Z6,{1,2}) missing");
              c.require(has({6}, 24UL), "Cay(Z6,{4,5}) missing");
              for (const auto& hit : hits) {
                c.require(arc_type_constraint_holds(hit.report, hit.structure),
                          "arc-type constraint failed on a hit");
                c.require(hit.family.has_value(), "hit without family match");
              }
            });

  criterion(9, "team invariants on every doubly regular hit", 300.0,
            [](Check& c) {
              SearchOptions opts;
              opts.max_order = 12;
              opts.predicate = SearchPredicate::DoublyRegularTeam;
              const auto hits = enumerate_cayley(opts);
              c.require(!hits.empty(), "no doubly regular hits");
              for (const auto& hit : hits) {
                const Digraph g = cayley(hit.factors, hit.connection);
                const auto ts = multipartite_structure(g);
                const auto split = edge_arc_split(g);
                c.require(hit.params.has_value(), "missing parameters");
                if (!hit.params) continue;
                c.require(testsupport::edge_counts_balanced(ts, split),
                          "edge counts unbalanced");
                if (const auto delta = hit.params->delta()) {
                  c.require(testsupport::arc_neighbor_differences_hold(
                                ts, split, *delta),
                            "arc neighbour-count difference violated");
                  const long long r = hit.params->r;
                  c.require(*delta == 0 || *delta == r ||
                                (r % 2 == 0 && *delta == r / 2),
                            "delta outside {0, r/2, r}");
                }
              }
            });

  criterion(10, "4-class scheme bridge never yields Type III", 60.0,
            [](Check& c) {
              int instances = 0;
              for (const auto& [name, g] : testsupport::corpus_up_to(48)) {
                WdrdReport report;
                try {
                  report = verify_wdrd(g);
                } catch (const NotStronglyConnectedError&) {
                  continue;
                }
                if (!report.scheme) continue;
                for (const auto& instance : bridge_instances(*report.scheme)) {
                  ++instances;
                  const auto cls = classify_type(instance.digraph);
                  c.require(cls.verdict == TeamType::TypeI ||
                                cls.verdict == TeamType::TypeII,
                            name + ": bridge digraph classified Type III");
                }
              }
              c.require(instances > 0, "no scheme met the bridge hypotheses");
            });

  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) failed\n", failures);
  return failures;
}
