#include "wdrd/digraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "wdrd/error.hpp"

namespace wdrd {

bool Digraph::has_arc(int u, int v) const {
  const auto& row = out[u];
  return std::binary_search(row.begin(), row.end(), v);
}

Digraph build_digraph(int n, std::vector<Arc> arc_list) {
  if (n <= 0) throw InputError("digraph needs at least one vertex");
  std::sort(arc_list.begin(), arc_list.end());
  arc_list.erase(std::unique(arc_list.begin(), arc_list.end()),
                 arc_list.end());
  for (const auto& [u, v] : arc_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("arc endpoint out of range: (" + std::to_string(u) +
                       "," + std::to_string(v) + ") with n=" +
                       std::to_string(n));
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  }
  Digraph g;
  g.n = n;
  g.arcs = std::move(arc_list);
  g.out.assign(n, {});
  g.in.assign(n, {});
  for (const auto& [u, v] : g.arcs) {
    g.out[u].push_back(v);
    g.in[v].push_back(u);
  }
  for (auto& row : g.in) std::sort(row.begin(), row.end());
  return g;
}

Digraph empty_digraph(int n) { return build_digraph(n, {}); }

Digraph complete_digraph(int n) {
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) arcs.emplace_back(u, v);
  return build_digraph(n, std::move(arcs));
}

Digraph converse(const Digraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs.size());
  for (const auto& [u, v] : g.arcs) arcs.emplace_back(v, u);
  return build_digraph(g.n, std::move(arcs));
}

namespace {

long long checked_order(const std::vector<int>& factors) {
  long long n = 1;
  for (int f : factors) {
    if (f < 1) throw InputError("cyclic factor must be positive");
    n *= f;
    if (n > 1'000'000) throw InputError("group order too large");
  }
  return n;
}

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

}  // namespace

Digraph cayley(const std::vector<int>& factors,
               const std::vector<std::vector<int>>& connection) {
  if (factors.empty()) throw InputError("empty factor list");
  const long long n = checked_order(factors);
  std::set<int> elements;
  for (const auto& s : connection) {
    if (s.size() != factors.size())
      throw InputError("connection element has wrong number of components");
    bool zero = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= factors[i])
        throw InputError("connection element component out of range");
      if (s[i] != 0) zero = false;
    }
    if (zero) throw InputError("identity element in connection set");
    elements.insert(encode(s, factors));
  }
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * elements.size());
  for (int x = 0; x < n; ++x) {
    const auto cx = decode(x, factors);
    for (int e : elements) {
      const auto ce = decode(e, factors);
      std::vector<int> cy(cx.size());
      for (std::size_t i = 0; i < cx.size(); ++i)
        cy[i] = (cx[i] + ce[i]) % factors[i];
      arcs.emplace_back(x, encode(cy, factors));
    }
  }
  return build_digraph(static_cast<int>(n), std::move(arcs));
}

Digraph cayley(int modulus, const std::vector<int>& connection) {
  std::vector<std::vector<int>> tuples;
  tuples.reserve(connection.size());
  for (int s : connection) tuples.push_back({s});
  return cayley(std::vector<int>{modulus}, tuples);
}

Digraph lexicographic_product(const Digraph& g, const Digraph& h) {
  const int nh = h.n;
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs.size() * static_cast<std::size_t>(nh) * nh +
               static_cast<std::size_t>(g.n) * h.arcs.size());
  for (const auto& [x, y] : g.arcs)
    for (int u = 0; u < nh; ++u)
      for (int v = 0; v < nh; ++v) arcs.emplace_back(x * nh + u, y * nh + v);
  for (int x = 0; x < g.n; ++x)
    for (const auto& [u, v] : h.arcs) arcs.emplace_back(x * nh + u, x * nh + v);
  return build_digraph(g.n * nh, std::move(arcs));
}

Digraph coclique_extension(const Digraph& g, int n) {
  if (n < 1) throw InputError("coclique extension needs n >= 1");
  return lexicographic_product(g, empty_digraph(n));
}

namespace {

// BFS distances from src over the given adjacency lists; -1 marks unreachable.
std::vector<int> bfs(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : adj[x])
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

}  // namespace

int girth(const Digraph& g) {
  int best = -1;
  for (int v = 0; v < g.n; ++v) {
    if (g.in[v].empty()) continue;
    const auto dist = bfs(g.out, v);
    for (int u : g.in[v])
      if (dist[u] >= 0 && (best < 0 || dist[u] + 1 < best)) best = dist[u] + 1;
  }
  if (best < 0) throw InputError("acyclic digraph has no circuit");
  return best;
}

int TwoWayPartition::index_of(int a, int b) const {
  const auto it = std::lower_bound(labels.begin(), labels.end(),
                                   std::make_pair(a, b));
  if (it == labels.end() || *it != std::make_pair(a, b)) return -1;
  return static_cast<int>(it - labels.begin());
}

TwoWayPartition two_way_partition(const Digraph& g) {
  const int n = g.n;
  TwoWayPartition part;
  part.n = n;
  part.dist.reserve(n);
  for (int x = 0; x < n; ++x) part.dist.push_back(bfs(g.out, x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (part.dist[x][y] < 0) throw NotStronglyConnectedError(x, y);

  std::set<std::pair<int, int>> seen;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      seen.emplace(part.dist[x][y], part.dist[y][x]);
  part.labels.assign(seen.begin(), seen.end());
  part.classes.assign(part.labels.size(), {});
  part.class_index.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int idx = part.index_of(part.dist[x][y], part.dist[y][x]);
      part.class_index[x * n + y] = idx;
      part.classes[idx].emplace_back(x, y);
    }
  return part;
}

bool TeamStructure::all_parts_at_least(int r) const {
  for (int s : sizes)
    if (s < r) return false;
  return true;
}

TeamStructure multipartite_structure(const Digraph& g) {
  const int n = g.n;
  // Non-adjacency must be transitive for the underlying graph to be complete
  // multipartite; scan for a witness triple before grouping.
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || g.adjacent(u, v)) continue;
      for (int w = 0; w < n; ++w) {
        if (w == u || w == v || g.adjacent(v, w)) continue;
        if (g.adjacent(u, w)) throw NonMultipartiteError(u, v, w);
      }
    }
  TeamStructure ts;
  ts.part_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (ts.part_of[x] >= 0) continue;
    std::vector<int> part{x};
    for (int y = x + 1; y < n; ++y)
      if (!g.adjacent(x, y)) part.push_back(y);
    const int id = ts.part_count();
    for (int y : part) ts.part_of[y] = id;
    ts.sizes.push_back(static_cast<int>(part.size()));
    ts.parts.push_back(std::move(part));
  }
  if (ts.part_count() < 2)
    throw InputError("underlying graph has fewer than two partite sets");
  const int r0 = ts.sizes.front();
  if (std::all_of(ts.sizes.begin(), ts.sizes.end(),
                  [r0](int s) { return s == r0; }))
    ts.equal_size = r0;
  ts.semicomplete = std::all_of(ts.sizes.begin(), ts.sizes.end(),
                                [](int s) { return s == 1; });
  return ts;
}

bool is_isomorphism_map(const Digraph& g, const Digraph& h,
                        const std::vector<int>& map) {
  if (g.n != h.n || static_cast<int>(map.size()) != g.n) return false;
  std::vector<char> used(h.n, 0);
  for (int v : map) {
    if (v < 0 || v >= h.n || used[v]) return false;
    used[v] = 1;
  }
  if (g.arcs.size() != h.arcs.size()) return false;
  for (const auto& [u, v] : g.arcs)
    if (!h.has_arc(map[u], map[v])) return false;
  return true;
}

namespace {

using Signature = std::vector<long long>;

// Joint colour refinement over both digraphs so colours are comparable.
struct Refinement {
  std::vector<int> gcolor, hcolor;
  int colours = 0;
};

std::optional<Refinement> refine(const Digraph& g, const Digraph& h) {
  Refinement ref;
  ref.gcolor.assign(g.n, 0);
  ref.hcolor.assign(h.n, 0);

  std::optional<TwoWayPartition> gpart, hpart;
  try {
    gpart = two_way_partition(g);
  } catch (const NotStronglyConnectedError&) {
  }
  try {
    hpart = two_way_partition(h);
  } catch (const NotStronglyConnectedError&) {
  }
  if (gpart.has_value() != hpart.has_value()) return std::nullopt;

  const auto initial = [&](const Digraph& d,
                           const std::optional<TwoWayPartition>& p,
                           int v) -> Signature {
    Signature sig{static_cast<long long>(d.out[v].size()),
                  static_cast<long long>(d.in[v].size())};
    if (p) {
      std::vector<long long> row;
      row.reserve(d.n);
      for (int y = 0; y < d.n; ++y) {
        const auto lab = p->label_of(v, y);
        row.push_back(lab.first * 4096LL + lab.second);
      }
      std::sort(row.begin(), row.end());
      sig.insert(sig.end(), row.begin(), row.end());
    }
    return sig;
  };

  std::map<Signature, int> table;
  for (int v = 0; v < g.n; ++v) {
    auto [it, _] = table.emplace(initial(g, gpart, v),
                                 static_cast<int>(table.size()));
    ref.gcolor[v] = it->second;
  }
  for (int v = 0; v < h.n; ++v) {
    auto [it, _] = table.emplace(initial(h, hpart, v),
                                 static_cast<int>(table.size()));
    ref.hcolor[v] = it->second;
  }
  ref.colours = static_cast<int>(table.size());

  for (int round = 0; round < g.n; ++round) {
    const auto signature = [&](const Digraph& d, const std::vector<int>& col,
                               int v) {
      Signature sig{col[v]};
      std::vector<long long> outs, ins;
      for (int y : d.out[v]) outs.push_back(col[y]);
      for (int y : d.in[v]) ins.push_back(col[y]);
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      sig.push_back(static_cast<long long>(outs.size()));
      sig.insert(sig.end(), outs.begin(), outs.end());
      sig.insert(sig.end(), ins.begin(), ins.end());
      return sig;
    };
    std::map<Signature, int> next;
    std::vector<int> ng(g.n), nh(h.n);
    for (int v = 0; v < g.n; ++v) {
      auto [it, _] = next.emplace(signature(g, ref.gcolor, v),
                                  static_cast<int>(next.size()));
      ng[v] = it->second;
    }
    for (int v = 0; v < h.n; ++v) {
      auto [it, _] = next.emplace(signature(h, ref.hcolor, v),
                                  static_cast<int>(next.size()));
      nh[v] = it->second;
    }
    const int count = static_cast<int>(next.size());
    ref.gcolor.swap(ng);
    ref.hcolor.swap(nh);
    if (count == ref.colours) break;
    ref.colours = count;
  }
  return ref;
}

struct IsoSearch {
  const Digraph& g;
  const Digraph& h;
  const std::vector<int>& gcolor;
  const std::vector<int>& hcolor;
  std::vector<int> map_gh, map_hg;
  long long nodes = 0;
  static constexpr long long kNodeBudget = 20'000'000;

  bool consistent(int v, int w) const {
    for (int u = 0; u < g.n; ++u) {
      if (map_gh[u] < 0) continue;
      if (g.has_arc(v, u) != h.has_arc(w, map_gh[u])) return false;
      if (g.has_arc(u, v) != h.has_arc(map_gh[u], w)) return false;
    }
    return true;
  }

  int next_vertex() const {
    int best = -1, best_score = -1;
    for (int v = 0; v < g.n; ++v) {
      if (map_gh[v] >= 0) continue;
      int score = 0;
      for (int u : g.out[v]) score += map_gh[u] >= 0;
      for (int u : g.in[v]) score += map_gh[u] >= 0;
      if (score > best_score) {
        best_score = score;
        best = v;
      }
    }
    return best;
  }

  bool dfs(int depth) {
    if (depth == g.n) return true;
    const int v = next_vertex();
    for (int w = 0; w < h.n; ++w) {
      if (map_hg[w] >= 0 || hcolor[w] != gcolor[v]) continue;
      if (++nodes > kNodeBudget)
        throw InputError("isomorphism search budget exceeded");
      if (!consistent(v, w)) continue;
      map_gh[v] = w;
      map_hg[w] = v;
      if (dfs(depth + 1)) return true;
      map_gh[v] = -1;
      map_hg[w] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Digraph& g,
                                              const Digraph& h,
                                              int max_vertices) {
  if (g.n > max_vertices || h.n > max_vertices)
    throw InputError("isomorphism size cap exceeded (budget " +
                     std::to_string(max_vertices) + " vertices)");
  if (g.n != h.n || g.arcs.size() != h.arcs.size()) return std::nullopt;
  const auto ref = refine(g, h);
  if (!ref) return std::nullopt;
  auto gm = ref->gcolor, hm = ref->hcolor;
  std::sort(gm.begin(), gm.end());
  std::sort(hm.begin(), hm.end());
  if (gm != hm) return std::nullopt;

  IsoSearch search{g, h, ref->gcolor, ref->hcolor,
                   std::vector<int>(g.n, -1), std::vector<int>(h.n, -1)};
  if (!search.dfs(0)) return std::nullopt;
  return search.map_gh;
}

}  // namespace wdrd
