#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace wdrd {

using Arc = std::pair<int, int>;

// Finite loop-free digraph on vertices 0..n-1. The arc list is sorted and
// deduplicated; adjacency lists are derived at construction. Instances are
// immutable after construction and safe to share between threads.
struct Digraph {
  int n = 0;
  std::vector<Arc> arcs;              // sorted, unique
  std::vector<std::vector<int>> out;  // out[v]: sorted out-neighbours
  std::vector<std::vector<int>> in;   // in[v]: sorted in-neighbours

  bool has_arc(int u, int v) const;
  bool has_edge(int u, int v) const { return has_arc(u, v) && has_arc(v, u); }
  bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }
  long long arc_count() const { return static_cast<long long>(arcs.size()); }

  bool operator==(const Digraph& other) const {
    return n == other.n && arcs == other.arcs;
  }
};

// Validates and deduplicates. Throws InputError on n <= 0, loops, or
// out-of-range endpoints.
Digraph build_digraph(int n, std::vector<Arc> arc_list);

Digraph empty_digraph(int n);
Digraph complete_digraph(int n);
Digraph converse(const Digraph& g);

// Cayley digraph of Z_{f1} x ... x Z_{fk}. Connection elements are tuples,
// componentwise reduced mod the factors and never the identity; arcs run
// x -> x + s. Vertex (c1,..,ck) is encoded in mixed radix with the first
// factor most significant.
Digraph cayley(const std::vector<int>& factors,
               const std::vector<std::vector<int>>& connection);
// Single cyclic factor convenience.
Digraph cayley(int modulus, const std::vector<int>& connection);

// Vertex (x,u) of g∘h is encoded as x*|Vh| + u.
Digraph lexicographic_product(const Digraph& g, const Digraph& h);

// g ∘ (edgeless digraph on n vertices); n >= 1.
Digraph coclique_extension(const Digraph& g, int n);

// Length of a shortest circuit. A symmetric arc pair gives girth 2.
// Throws InputError on acyclic digraphs.
int girth(const Digraph& g);

// Partition of the ordered vertex pairs by two-way distance. Defined only for
// strongly connected digraphs. Classes are kept in lexicographic label order,
// (0,0) first; pair lists are lexicographically sorted.
struct TwoWayPartition {
  int n = 0;
  std::vector<std::pair<int, int>> labels;
  std::vector<std::vector<Arc>> classes;
  std::vector<std::vector<int>> dist;  // dist[x][y] = forward distance
  std::vector<int> class_index;        // n*n entries, row-major

  int class_count() const { return static_cast<int>(labels.size()); }
  int index_of(int a, int b) const;  // -1 when the label is absent
  int class_of(int x, int y) const { return class_index[x * n + y]; }
  std::pair<int, int> label_of(int x, int y) const {
    return labels[class_of(x, y)];
  }
};

// All-source BFS in both orientations. Throws NotStronglyConnectedError with
// a witness pair when some vertex cannot reach another.
TwoWayPartition two_way_partition(const Digraph& g);

// Partition of the vertex set by the non-adjacency relation, defined when the
// underlying graph is complete multipartite with at least two parts.
struct TeamStructure {
  std::vector<std::vector<int>> parts;  // ordered by least member
  std::vector<int> part_of;
  std::vector<int> sizes;
  std::optional<int> equal_size;  // r, when all parts share a size
  bool semicomplete = false;      // every part is a single vertex

  int part_count() const { return static_cast<int>(parts.size()); }
  bool all_parts_at_least(int r) const;
};

// Throws NonMultipartiteError with a witness triple when non-adjacency is not
// transitive, and InputError when there are fewer than two parts. Part sizes
// below 2 are reported through the structure, not as errors.
TeamStructure multipartite_structure(const Digraph& g);

// Arc-preserving bijection from g onto h, or nullopt. Backtracking over a
// joint colour refinement by degree and two-way-distance data; deterministic
// for fixed inputs. Throws InputError beyond the vertex or node budget.
std::optional<std::vector<int>> is_isomorphic(const Digraph& g,
                                              const Digraph& h,
                                              int max_vertices = 128);

// Checks that map is an arc-preserving bijection from g onto h.
bool is_isomorphism_map(const Digraph& g, const Digraph& h,
                        const std::vector<int>& map);

}  // namespace wdrd
