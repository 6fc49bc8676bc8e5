#include <doctest.h>

#include "support.hpp"
#include "wdrd/digraph.hpp"
#include "wdrd/error.hpp"
#include "wdrd/family.hpp"
#include "wdrd/verify.hpp"

using namespace wdrd;

TEST_CASE("verify_wdrd on Cay(Z6,{1,2})") {
  const auto report = verify_wdrd(cayley(6, {1, 2}));
  CHECK(report.strongly_connected);
  CHECK(report.is_scheme);
  CHECK(report.is_nonsymmetric);
  CHECK(report.is_wdrd);
  CHECK(report.is_commutative);
  CHECK(report.t_set == std::vector<int>{3, 4});
  REQUIRE(report.classes.size() == 6);
  for (const auto& cs : report.classes) {
    CHECK(cs.size == 6);
    CHECK(cs.valency == 1);
  }
}

TEST_CASE("verify_wdrd negatives") {
  const auto symmetric = verify_wdrd(complete_digraph(3));
  CHECK(symmetric.is_scheme);
  CHECK_FALSE(symmetric.is_nonsymmetric);
  CHECK_FALSE(symmetric.is_wdrd);

  const auto c4 = verify_wdrd(cayley(4, {1}));
  CHECK(c4.is_wdrd);
  CHECK(c4.is_commutative);

  const auto bad = verify_wdrd(
      build_digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}));
  CHECK(bad.strongly_connected);
  CHECK_FALSE(bad.is_scheme);
  CHECK_FALSE(bad.is_wdrd);
  CHECK(bad.t_set_informational);
  CHECK(bad.failure.has_value());

  const auto path = verify_wdrd(build_digraph(2, {{0, 1}}));
  CHECK_FALSE(path.strongly_connected);
  CHECK_FALSE(path.is_wdrd);
  CHECK(path.unreachable_witness == Arc{1, 0});
}

TEST_CASE("arc_type_set") {
  CHECK(arc_type_set(two_way_partition(cayley(6, {1, 2}))) ==
        std::vector<int>{3, 4});
  CHECK(arc_type_set(two_way_partition(family2(2, builtin("c3").digraph))) ==
        std::vector<int>{3});
  CHECK(arc_type_set(two_way_partition(
            coclique_extension(cayley(4, {1, 2}), 2))) ==
        std::vector<int>{2, 3});
}

TEST_CASE("arc-type constraint") {
  const Digraph g = cayley(6, {1, 2});
  const auto report = verify_wdrd(g);
  const auto ts = multipartite_structure(g);
  CHECK(arc_type_constraint_holds(report, ts));

  WdrdReport forged = report;
  forged.t_set = {2, 4};
  CHECK_FALSE(arc_type_constraint_holds(forged, ts));
  forged.t_set = {2, 3};
  CHECK(arc_type_constraint_holds(forged, ts));
  forged.t_set = {2, 3, 4};
  CHECK_FALSE(arc_type_constraint_holds(forged, ts));

  forged.is_wdrd = false;
  CHECK_THROWS_AS(arc_type_constraint_holds(forged, ts), InputError);
  const auto odd = multipartite_structure(
      build_digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}));
  CHECK_THROWS_AS(arc_type_constraint_holds(report, odd), InputError);
}

TEST_CASE("arc types of multipartite WDRDs stay within the bounds") {
  for (const auto& [name, g] : testsupport::corpus_up_to(32)) {
    CAPTURE(name);
    const auto report = verify_wdrd(g);
    if (!report.is_wdrd || !report.is_commutative) continue;
    TeamStructure ts;
    try {
      ts = multipartite_structure(g);
    } catch (const InputError&) {
      continue;
    }
    if (!ts.all_parts_at_least(2)) continue;

    CHECK(arc_type_constraint_holds(report, ts));
    for (int q : report.t_set) CHECK(q <= 4);
    bool has_two = false;
    for (int q : report.t_set) has_two = has_two || q == 2;
    if (has_two)
      for (const auto& cs : report.classes)
        CHECK_FALSE((cs.label.first >= 3 && cs.label.second >= 3));
  }
}
