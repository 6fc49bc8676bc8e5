#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wdrd/digraph.hpp"

namespace wdrd {

// Two pairs in the same class with different counts |R_i(x) ∩ R_{j*}(y)|.
// The witness is the first mismatch in canonical scan order: classes i, j, l
// ascending, pairs in lexicographic order.
struct ConstancyFailure {
  int i = 0, j = 0, l = 0;
  std::pair<int, int> label_i{0, 0}, label_j{0, 0}, label_l{0, 0};
  Arc first_pair{0, 0}, second_pair{0, 0};
  long long first_count = 0, second_count = 0;

  bool operator==(const ConstancyFailure& o) const {
    return i == o.i && j == o.j && l == o.l && first_pair == o.first_pair &&
           second_pair == o.second_pair && first_count == o.first_count &&
           second_count == o.second_count;
  }
  std::string describe() const;
};

struct AssociationScheme {
  int n = 0;
  std::vector<std::pair<int, int>> labels;  // canonical order, (0,0) first
  std::vector<std::vector<Arc>> classes;
  std::vector<int> converse;  // involution i -> i*
  std::vector<std::vector<std::vector<long long>>> p;  // p[i][j][l]
  std::vector<long long> valencies;  // k_i = p[i][i*][0]

  int class_count() const { return static_cast<int>(labels.size()); }
  int degree() const { return class_count() - 1; }
  int index_of(int a, int b) const;
  bool commutative() const;
  bool symmetric() const;
};

// Verifies the constant-intersection-number axiom over the partition and
// returns the scheme with its tensor and valencies, or the first witness of
// failure. Counts are taken from exact integer products of the class
// adjacency matrices; the triple-loop route lives in the search harness.
std::variant<AssociationScheme, ConstancyFailure> intersection_tensor(
    const TwoWayPartition& partition);

struct SchemeReport {
  bool is_scheme = false;
  bool is_commutative = false;
  bool is_symmetric = false;
  std::optional<ConstancyFailure> failure_witness;
  std::optional<AssociationScheme> scheme;  // present iff is_scheme
};

SchemeReport verify_scheme(const TwoWayPartition& partition);

// One failed instance of the standard intersection-number identities:
//   1: k_i k_j = Σ_l p_{i,j}^l k_l
//   2: p_{i,j}^l k_l = p_{l,j*}^i k_i = p_{i*,l}^j k_j
//   3: Σ_j p_{i,j}^l = k_i
//   4: Σ_r p_{i,l}^r p_{m,r}^j = Σ_t p_{m,i}^t p_{t,l}^j
struct IdentityViolation {
  int identity = 0;
  std::vector<int> indices;
  long long lhs = 0, rhs = 0;
};

std::vector<IdentityViolation> intersection_identities(
    const AssociationScheme& s);

struct ClosedSubset {
  std::vector<int> indices;  // sorted, always contains 0
  bool contains(int i) const;
};

// Least fixed point of adding the diagonal, converses, and every l with
// p_{i*,j}^l > 0 for i,j already present.
ClosedSubset closure(const AssociationScheme& s, const std::vector<int>& seed);

bool is_closed(const AssociationScheme& s, const std::vector<int>& indices);

// True iff every non-diagonal relation generates the whole scheme.
bool is_primitive(const AssociationScheme& s);

// Vertex classes F(x), ordered by least member. Requires f closed.
std::vector<std::vector<int>> quotient_classes(const TwoWayPartition& partition,
                                               const ClosedSubset& f);

// Quotient digraph over a closed subset: vertices are the classes F(x) in
// least-member order, and (F(x),F(y)) is an arc iff the classes are distinct
// and some member pair is an arc of g. Requires equal class sizes.
Digraph quotient(const Digraph& g, const TwoWayPartition& partition,
                 const ClosedSubset& f);

}  // namespace wdrd
