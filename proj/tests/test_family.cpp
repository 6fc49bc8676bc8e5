#include <doctest.h>

#include <set>

#include "support.hpp"
#include "wdrd/digraph.hpp"
#include "wdrd/error.hpp"
#include "wdrd/family.hpp"
#include "wdrd/team.hpp"
#include "wdrd/verify.hpp"

using namespace wdrd;

TEST_CASE("builtin catalog") {
  CHECK(builtin("c4").digraph == cayley(4, {1}));
  CHECK(builtin("cay_z6_12").digraph == cayley(6, {1, 2}));
  CHECK(builtin("paley3").digraph == cayley(3, {1}));

  const auto paley7 = builtin("paley7");
  CHECK(paley7.digraph == cayley(7, {1, 2, 4}));
  CHECK(paley7.report.is_wdrd);
  CHECK(paley7.report.t_set == std::vector<int>{3});
  const std::vector<std::pair<int, int>> labels{{0, 0}, {1, 2}, {2, 1}};
  REQUIRE(paley7.report.partition.has_value());
  CHECK(paley7.report.partition->labels == labels);

  CHECK(builtin("paley11").digraph.n == 11);
  CHECK(builtin("complete3").digraph == complete_digraph(3));
  CHECK_FALSE(builtin("complete3").report.is_wdrd);

  CHECK_THROWS_AS(builtin("paley5"), InputError);
  CHECK_THROWS_AS(builtin("paley9"), InputError);
  CHECK_THROWS_AS(builtin("nope"), InputError);
}

TEST_CASE("family 1") {
  const Digraph g = family1(1);
  CHECK(g == cayley(6, {1, 2}));
  CHECK(family1(2).n == 12);
  CHECK_THROWS_AS(family1(0), InputError);
}

TEST_CASE("family 2") {
  const Digraph g = family2(2, builtin("c3").digraph);
  CHECK(g.n == 6);
  const auto report = verify_wdrd(g);
  const std::vector<std::pair<int, int>> labels{
      {0, 0}, {1, 2}, {2, 1}, {3, 3}};
  REQUIRE(report.partition.has_value());
  CHECK(report.partition->labels == labels);
  REQUIRE(report.scheme.has_value());
  CHECK(report.scheme->valencies[report.scheme->index_of(1, 2)] == 2);
  CHECK(report.scheme->valencies[report.scheme->index_of(3, 3)] == 1);

  CHECK_THROWS_WITH_AS(family2(1, builtin("c3").digraph),
                       "family 2: l >= 2 required", InputError);
  // girth-4 base is rejected
  CHECK_THROWS_AS(family2(2, builtin("c4").digraph), InputError);
  // multipartite base is not semicomplete
  CHECK_THROWS_AS(family2(2, cayley(6, {1, 2})), InputError);
}

TEST_CASE("family 3") {
  const Digraph g = family3(1, builtin("c3").digraph);
  CHECK(g.n == 12);
  CHECK(verify_wdrd(g).is_wdrd);
  CHECK_THROWS_AS(family3(1, builtin("cay_z4_12").digraph), InputError);
  CHECK_THROWS_AS(family3(0, builtin("c3").digraph), InputError);
}

TEST_CASE("family 3 outputs take their class labels from both factors") {
  for (const auto& base : {"c3", "paley7", "paley11"}) {
    CAPTURE(base);
    const Digraph sigma = builtin(base).digraph;
    const Digraph g = lexicographic_product(sigma, builtin("c4").digraph);
    const auto report = verify_wdrd(g);
    CHECK(report.is_wdrd);

    std::set<std::pair<int, int>> expected;
    for (const auto& l : two_way_partition(sigma).labels) expected.insert(l);
    for (const auto& l : two_way_partition(builtin("c4").digraph).labels)
      expected.insert(l);
    std::set<std::pair<int, int>> got(report.partition->labels.begin(),
                                      report.partition->labels.end());
    CHECK(got == expected);
  }
}

TEST_CASE("family 4") {
  CHECK(family4(1, builtin("c4").digraph) == cayley(4, {1}));
  CHECK(family4(2, builtin("c4").digraph).n == 8);
  // Doubly regular but with parameters off the closed form.
  CHECK_THROWS_AS(family4(1, cayley(9, {1, 4, 7})), InputError);
  CHECK_THROWS_AS(family4(1, cayley(6, {1, 2})), InputError);
}

TEST_CASE("family 5") {
  CHECK(family5(builtin("c4").digraph) == cayley(4, {1}));
  // All-edges complete multipartite digraph is Type II but its attached
  // scheme is symmetric, so it is not a WDRD.
  CHECK_THROWS_AS(family5(coclique_extension(complete_digraph(3), 2)),
                  InputError);
  // Type I input.
  CHECK_THROWS_AS(family5(coclique_extension(cayley(4, {1, 2}), 2)),
                  InputError);
}

TEST_CASE("identify routes builtins") {
  const auto z6 = identify(cayley(6, {1, 2}));
  REQUIRE(z6.has_value());
  CHECK(z6->family == 1);
  CHECK(z6->extension == 1);

  const auto c4 = identify(cayley(4, {1}));
  REQUIRE(c4.has_value());
  CHECK(c4->family == 4);
  CHECK(c4->extension == 1);
  CHECK(c4->team == std::make_pair(2, 2));

  CHECK_THROWS_AS(identify(cayley(3, {1})), InputError);
  CHECK_THROWS_AS(identify(complete_digraph(4)), InputError);
}

TEST_CASE("identify recognizes girth-2 coclique extensions") {
  const Digraph g = coclique_extension(cayley(4, {1, 2}), 2);
  const auto match = identify(g);
  REQUIRE(match.has_value());
  CHECK(match->family == 2);
  CHECK(match->extension == 2);
  CHECK(girth(match->base) == 2);
  CHECK(multipartite_structure(match->base).semicomplete);
  CHECK(match->base_name == "cay_z4_12");
  CHECK(is_isomorphism_map(coclique_extension(match->base, 2), g,
                           match->iso_map));
}

TEST_CASE("identify round-trips every family output") {
  const std::vector<std::pair<std::string, int>> expect{
      {"family1_n1", 1}, {"family1_n2", 1},      {"family2_l2_c3", 2},
      {"family2_l3_c3", 2}, {"family2_l2_z4", 2}, {"family2_l3_z4", 2},
      {"family2_l2_paley7", 2}, {"family3_n1_c3", 3}, {"family3_n2_c3", 3},
      {"family3_n1_paley7", 3}, {"family4_n1_c4", 4}, {"family4_n2_c4", 4},
      {"family4_n3_c4", 4}};
  for (const auto& [name, family] : expect) {
    for (const auto& entry : testsupport::corpus()) {
      if (entry.name != name) continue;
      CAPTURE(name);
      const auto match = identify(entry.digraph);
      REQUIRE(match.has_value());
      CHECK(match->family == family);
      const Digraph recon = reconstruct(*match);
      CHECK(is_isomorphism_map(recon, entry.digraph, match->iso_map));
    }
  }
}

TEST_CASE("identify handles the rotational (3,3)-team tournament") {
  // Cay(Z9,{1,4,7}) is a 3-coclique extension of the directed triangle.
  const auto match = identify(cayley(9, {1, 4, 7}));
  REQUIRE(match.has_value());
  CHECK(match->family == 2);
  CHECK(match->extension == 3);
  CHECK(match->base_name == "c3");
}

TEST_CASE("family constructor outputs satisfy the arc-type constraint") {
  for (const auto& [name, g] : testsupport::corpus_up_to(48)) {
    if (name.rfind("family", 0) != 0) continue;
    CAPTURE(name);
    const auto report = verify_wdrd(g);
    REQUIRE(report.is_wdrd);
    REQUIRE(report.is_commutative);
    CHECK(arc_type_constraint_holds(report, multipartite_structure(g)));
  }
}
