#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wdrd/digraph.hpp"
#include "wdrd/family.hpp"
#include "wdrd/team.hpp"

namespace testsupport {

struct CorpusEntry {
  std::string name;
  wdrd::Digraph digraph;
};

// Fixed list of digraphs every cross-module suite runs over: catalog bases,
// family outputs, and known negatives.
inline std::vector<CorpusEntry> corpus() {
  using namespace wdrd;
  std::vector<CorpusEntry> out;
  const auto add = [&](std::string name, Digraph g) {
    out.push_back({std::move(name), std::move(g)});
  };
  add("c3", builtin("c3").digraph);
  add("c4", builtin("c4").digraph);
  add("c5", cayley(5, {1}));
  add("cay_z4_12", builtin("cay_z4_12").digraph);
  add("cay_z6_12", builtin("cay_z6_12").digraph);
  add("cay_z6_14", cayley(6, {1, 4}));
  add("cay_z8_123", cayley(8, {1, 2, 3}));
  add("cay_z9_147", cayley(9, {1, 4, 7}));
  add("paley7", builtin("paley7").digraph);
  add("paley11", builtin("paley11").digraph);
  add("complete3", builtin("complete3").digraph);
  add("all_edges_k3x2", coclique_extension(complete_digraph(3), 2));
  add("five_arc", build_digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}));
  add("family1_n1", family1(1));
  add("family1_n2", family1(2));
  add("family2_l2_c3", family2(2, builtin("c3").digraph));
  add("family2_l3_c3", family2(3, builtin("c3").digraph));
  add("family2_l2_z4", family2(2, builtin("cay_z4_12").digraph));
  add("family2_l3_z4", family2(3, builtin("cay_z4_12").digraph));
  add("family2_l2_paley7", family2(2, builtin("paley7").digraph));
  add("family3_n1_c3", family3(1, builtin("c3").digraph));
  add("family3_n2_c3", family3(2, builtin("c3").digraph));
  add("family3_n1_paley7", family3(1, builtin("paley7").digraph));
  add("family4_n1_c4", family4(1, builtin("c4").digraph));
  add("family4_n2_c4", family4(2, builtin("c4").digraph));
  add("family4_n3_c4", family4(3, builtin("c4").digraph));
  return out;
}

inline std::vector<CorpusEntry> corpus_up_to(int max_vertices) {
  std::vector<CorpusEntry> out;
  for (auto& entry : corpus())
    if (entry.digraph.n <= max_vertices) out.push_back(std::move(entry));
  return out;
}

// Independent distance oracle (Floyd-Warshall; the library uses BFS).
inline std::optional<std::vector<std::vector<int>>> floyd_warshall(
    const wdrd::Digraph& g) {
  const int n = g.n;
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.arcs) d[u][v] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i][j] >= inf) return std::nullopt;
  return d;
}

// Edge counts e_ij = |E_j(x)| must be constant over x in V_i and symmetric
// in (i,j).
inline bool edge_counts_balanced(const wdrd::TeamStructure& ts,
                                 const wdrd::EdgeArcSplit& split) {
  const int m = ts.part_count();
  std::vector<std::vector<long long>> e(m, std::vector<long long>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      for (int x : ts.parts[i]) {
        long long count = 0;
        for (int y : ts.parts[j]) count += split.edge_graph.has_arc(x, y);
        if (e[i][j] < 0)
          e[i][j] = count;
        else if (e[i][j] != count)
          return false;
      }
    }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (e[i][j] != e[j][i]) return false;
  return true;
}

// For every pure arc (x,y) across parts, |A_j+(x)| - |A_i+(y)| must equal
// delta; for every edge the two counts must agree.
inline bool arc_neighbor_differences_hold(const wdrd::TeamStructure& ts,
                                          const wdrd::EdgeArcSplit& split,
                                          long long delta) {
  const auto arc_count_into = [&](int x, int part) {
    long long count = 0;
    for (int y : ts.parts[part]) count += split.arc_digraph.has_arc(x, y);
    return count;
  };
  for (const auto& [x, y] : split.arc_digraph.arcs) {
    const int i = ts.part_of[x], j = ts.part_of[y];
    if (arc_count_into(x, j) - arc_count_into(y, i) != delta) return false;
  }
  for (const auto& [x, y] : split.edge_graph.arcs) {
    const int i = ts.part_of[x], j = ts.part_of[y];
    if (arc_count_into(x, j) != arc_count_into(y, i)) return false;
  }
  return true;
}

}  // namespace testsupport
