#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wdrd/digraph.hpp"
#include "wdrd/scheme.hpp"

namespace wdrd {

// Split of the arc set into symmetric pairs (kept in both directions) and
// pure arcs. The two arc sets are disjoint and their union is the original.
struct EdgeArcSplit {
  Digraph edge_graph;
  Digraph arc_digraph;
};

EdgeArcSplit edge_arc_split(const Digraph& g);

// The five classes of an ordered vertex pair in a team semicomplete
// multipartite digraph, in canonical scan order.
enum class PairClass { Equal = 0, Arc, ReverseArc, Edge, SamePart };

const char* pair_class_name(PairClass c);

struct RegularityFailure {
  enum class Kind { NonRegular, NonConstant, MixedMismatch } kind =
      Kind::NonConstant;
  // NonConstant / MixedMismatch: which matrix product (indices into {0,1})
  // and which pair class disagreed.
  int product_i = 0, product_j = 0;
  PairClass cls = PairClass::Equal;
  Arc first_pair{0, 0}, second_pair{0, 0};
  long long first_count = 0, second_count = 0;
  // NonRegular: two vertices with different degrees.
  int vertex_a = 0, vertex_b = 0;
  long long degree_a = 0, degree_b = 0;

  std::string describe() const;
};

// Coefficient table of a doubly regular team semicomplete multipartite
// digraph: for each product A_i A_j the walk counts over the five pair
// classes are the constants t (diagonal, s=0 only), alpha_s, beta_s,
// gamma_s, eta_s with s = i+j. Coefficients of identically-zero matrices
// are 0 by convention.
struct DoublyRegularParams {
  long long t = 0;
  std::array<long long, 3> alpha{}, beta{}, gamma{}, eta{};
  int m = 0, r = 0;   // part count and common part size
  long long k = 0;    // out-valency
  bool arcs_empty = false;

  // beta1+beta2-alpha1-alpha2; absent when the pure-arc set is empty.
  std::optional<long long> delta() const {
    if (arcs_empty) return std::nullopt;
    return beta[1] + beta[2] - alpha[1] - alpha[2];
  }
};

// Requires a team structure with equal part sizes >= 2 (throws InputError
// otherwise). Returns the coefficient table, or a failure witness when the
// digraph is not regular, some walk count is non-constant on a class, or the
// two mixed products disagree.
std::variant<DoublyRegularParams, RegularityFailure> doubly_regular_params(
    const Digraph& g);

// The (alpha, beta, gamma) triple of a doubly regular team tournament:
// A^2 = alpha*A + beta*A^T + gamma*(J - I - A - A^T). Requires a team
// structure with equal part sizes >= 2 and an empty edge set.
struct TournamentParams {
  long long alpha = 0, beta = 0, gamma = 0;
  int m = 0, r = 0;
  long long k = 0;

  bool operator==(const TournamentParams& o) const {
    return alpha == o.alpha && beta == o.beta && gamma == o.gamma;
  }
};

std::variant<TournamentParams, RegularityFailure> tournament_params(
    const Digraph& g);

// True iff beta-alpha = 0, r is even, and every vertex has exactly r/2
// out-neighbours in every other part. Requires tournament_params to succeed.
bool is_type2_tournament(const Digraph& g);

// Parameter triple ((k-2)l/4, (k-2)l/4, l^2(k-1)/(4(l-1))) of a Type II
// team tournament; throws InputError when a component is not an integer.
std::array<long long, 3> type2_parameters(long long k, long long l);

enum class TeamType { TypeI, TypeII, TypeIII };

const char* team_type_name(TeamType t);

// Per-pair structural witness. For Type III the tag gives the matched case:
// 1 = all edges, 2 = one side splits with full arc blocks, 3 = both sides
// split into edge and arc blocks.
struct PairWitness {
  int i = 0, j = 0;
  int tag = 0;  // 0 = none of the three cases
  std::vector<int> i_first, i_second, j_first, j_second;
};

struct TypeClassification {
  TeamType verdict = TeamType::TypeII;
  std::optional<long long> delta;  // absent = indeterminate (no pure arcs)
  DoublyRegularParams params;
  // Type I: the semicomplete base and the coclique-extension witness map
  // (base extension vertex -> vertex of g).
  std::optional<Digraph> base;
  std::optional<std::vector<int>> base_map;
  // Type II: tables c_ij (constant pure-arc out-counts) and e_ij (constant
  // edge counts); diagonal entries are 0.
  std::vector<std::vector<long long>> c, e;
  std::vector<PairWitness> pairs;
};

// Matches delta against {r, 0, r/2} and verifies the corresponding
// structural condition on every part pair. Throws TheoremViolation when
// delta falls outside the admissible set or the matched condition fails;
// throws InputError when the digraph is not doubly regular.
TypeClassification classify_type(const Digraph& g);

TypeClassification classify_with_params(const Digraph& g,
                                        const TeamStructure& ts,
                                        const EdgeArcSplit& split,
                                        const DoublyRegularParams& params);

// The per-pair analyzer behind the Type III check, in match order tag 1,
// then 3, then 2. Exposed for direct testing on crafted blocks.
PairWitness classify_pair(const EdgeArcSplit& split,
                          const TeamStructure& ts, int i, int j);

// Relabelings of a 4-class scheme with exactly one non-symmetric converse
// pair (R1, R2=R1^T) whose digraph (X, R1 ∪ R3) is a team semicomplete
// multipartite digraph: R4 symmetric with R0 ∪ R4 an equivalence on >= 2
// classes of size >= 2, and R1 ∪ R3 strongly connected.
struct BridgeInstance {
  int r1 = 0, r2 = 0, r3 = 0, r4 = 0;  // class indices in the scheme
  Digraph digraph;                     // (X, R1 ∪ R3)
};

std::vector<BridgeInstance> bridge_instances(const AssociationScheme& s);

}  // namespace wdrd
