#include "wdrd/team.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "wdrd/error.hpp"

namespace wdrd {

EdgeArcSplit edge_arc_split(const Digraph& g) {
  std::vector<Arc> edges, pure;
  for (const auto& [u, v] : g.arcs)
    (g.has_arc(v, u) ? edges : pure).emplace_back(u, v);
  return EdgeArcSplit{build_digraph(g.n, std::move(edges)),
                      build_digraph(g.n, std::move(pure))};
}

const char* pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::Equal: return "equal";
    case PairClass::Arc: return "arc";
    case PairClass::ReverseArc: return "reverse-arc";
    case PairClass::Edge: return "edge";
    case PairClass::SamePart: return "same-part";
  }
  return "?";
}

const char* team_type_name(TeamType t) {
  switch (t) {
    case TeamType::TypeI: return "Type-I";
    case TeamType::TypeII: return "Type-II";
    case TeamType::TypeIII: return "Type-III";
  }
  return "?";
}

std::string RegularityFailure::describe() const {
  switch (kind) {
    case Kind::NonRegular:
      return "not regular: vertex " + std::to_string(vertex_a) +
             " has degree " + std::to_string(degree_a) + " but vertex " +
             std::to_string(vertex_b) + " has degree " +
             std::to_string(degree_b);
    case Kind::NonConstant:
      return std::string("walk count for product A_") +
             std::to_string(product_i) + "A_" + std::to_string(product_j) +
             " is not constant on the " + pair_class_name(cls) +
             " class: pair (" + std::to_string(first_pair.first) + "," +
             std::to_string(first_pair.second) + ") gives " +
             std::to_string(first_count) + " but pair (" +
             std::to_string(second_pair.first) + "," +
             std::to_string(second_pair.second) + ") gives " +
             std::to_string(second_count);
    case Kind::MixedMismatch:
      return std::string("mixed products A_0A_1 and A_1A_0 disagree on the ") +
             pair_class_name(cls) + " class: " + std::to_string(first_count) +
             " vs " + std::to_string(second_count);
  }
  return "?";
}

namespace {

using Mat = std::vector<long long>;

Mat adjacency(const Digraph& g) {
  Mat a(static_cast<std::size_t>(g.n) * g.n, 0);
  for (const auto& [x, y] : g.arcs) a[x * g.n + y] = 1;
  return a;
}

Mat multiply(const Mat& a, const Mat& b, int n) {
  Mat c(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const long long aik = a[i * n + k];
      if (!aik) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

struct PairData {
  std::vector<PairClass> cls;                // n*n, row-major
  std::array<std::vector<Arc>, 5> pairs;     // lexicographically ordered
};

PairData pair_data(const Digraph& g, const EdgeArcSplit& split,
                   const TeamStructure& ts) {
  PairData data;
  const int n = g.n;
  data.cls.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      PairClass c;
      if (x == y)
        c = PairClass::Equal;
      else if (split.edge_graph.has_arc(x, y))
        c = PairClass::Edge;
      else if (split.arc_digraph.has_arc(x, y))
        c = PairClass::Arc;
      else if (split.arc_digraph.has_arc(y, x))
        c = PairClass::ReverseArc;
      else if (ts.part_of[x] == ts.part_of[y])
        c = PairClass::SamePart;
      else
        throw InputError("cross-part pair without adjacency");
      data.cls[x * n + y] = c;
      data.pairs[static_cast<int>(c)].emplace_back(x, y);
    }
  return data;
}

std::optional<RegularityFailure> check_regular(const Digraph& g,
                                               long long& valency) {
  valency = static_cast<long long>(g.out[0].size());
  for (int v = 0; v < g.n; ++v) {
    const long long outd = static_cast<long long>(g.out[v].size());
    const long long ind = static_cast<long long>(g.in[v].size());
    if (outd != valency || ind != valency) {
      RegularityFailure f;
      f.kind = RegularityFailure::Kind::NonRegular;
      f.vertex_a = 0;
      f.vertex_b = v;
      f.degree_a = valency;
      f.degree_b = outd != valency ? outd : ind;
      return f;
    }
  }
  return std::nullopt;
}

// Extracts the five class constants of one matrix product, scanning classes
// in canonical order and pairs lexicographically. Empty classes give 0.
std::optional<RegularityFailure> decompose(const Mat& m, int n,
                                           const PairData& data, int pi,
                                           int pj,
                                           std::array<long long, 5>& out) {
  for (int c = 0; c < 5; ++c) {
    const auto& pairs = data.pairs[c];
    if (pairs.empty()) {
      out[c] = 0;
      continue;
    }
    const long long ref = m[pairs.front().first * n + pairs.front().second];
    for (const auto& [x, y] : pairs) {
      const long long count = m[x * n + y];
      if (count != ref) {
        RegularityFailure f;
        f.kind = RegularityFailure::Kind::NonConstant;
        f.product_i = pi;
        f.product_j = pj;
        f.cls = static_cast<PairClass>(c);
        f.first_pair = pairs.front();
        f.second_pair = {x, y};
        f.first_count = ref;
        f.second_count = count;
        return f;
      }
    }
    out[c] = ref;
  }
  return std::nullopt;
}

TeamStructure require_team(const Digraph& g) {
  TeamStructure ts = multipartite_structure(g);
  if (!ts.equal_size || *ts.equal_size < 2)
    throw InputError("not an (m,r)-team semicomplete multipartite digraph: "
                     "part sizes must be equal and >= 2");
  return ts;
}

}  // namespace

std::variant<DoublyRegularParams, RegularityFailure> doubly_regular_params(
    const Digraph& g) {
  const TeamStructure ts = require_team(g);
  long long k = 0;
  if (auto f = check_regular(g, k)) return *f;
  const EdgeArcSplit split = edge_arc_split(g);
  const PairData data = pair_data(g, split, ts);
  const int n = g.n;
  const Mat a0 = adjacency(split.edge_graph);
  const Mat a1 = adjacency(split.arc_digraph);

  // Products in the order (0,0), (0,1), (1,0), (1,1).
  std::array<std::array<long long, 5>, 4> coeffs;
  const std::array<std::pair<int, int>, 4> products{
      {{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
  for (int idx = 0; idx < 4; ++idx) {
    const auto [pi, pj] = products[idx];
    const Mat m = multiply(pi == 0 ? a0 : a1, pj == 0 ? a0 : a1, n);
    if (auto f = decompose(m, n, data, pi, pj, coeffs[idx])) return *f;
    if (pi + pj > 0 && coeffs[idx][0] != 0) {
      RegularityFailure f;
      f.kind = RegularityFailure::Kind::NonConstant;
      f.product_i = pi;
      f.product_j = pj;
      f.cls = PairClass::Equal;
      f.first_pair = {0, 0};
      f.second_pair = {0, 0};
      f.first_count = 0;
      f.second_count = coeffs[idx][0];
      return f;
    }
  }
  for (int c = 0; c < 5; ++c)
    if (coeffs[1][c] != coeffs[2][c]) {
      RegularityFailure f;
      f.kind = RegularityFailure::Kind::MixedMismatch;
      f.product_i = 0;
      f.product_j = 1;
      f.cls = static_cast<PairClass>(c);
      f.first_count = coeffs[1][c];
      f.second_count = coeffs[2][c];
      return f;
    }

  DoublyRegularParams params;
  params.t = coeffs[0][0];
  for (int s = 0; s < 3; ++s) {
    const int idx = s == 0 ? 0 : (s == 1 ? 1 : 3);
    params.alpha[s] = coeffs[idx][static_cast<int>(PairClass::Arc)];
    params.beta[s] = coeffs[idx][static_cast<int>(PairClass::ReverseArc)];
    params.gamma[s] = coeffs[idx][static_cast<int>(PairClass::Edge)];
    params.eta[s] = coeffs[idx][static_cast<int>(PairClass::SamePart)];
  }
  params.m = ts.part_count();
  params.r = *ts.equal_size;
  params.k = k;
  params.arcs_empty = split.arc_digraph.arcs.empty();
  return params;
}

std::variant<TournamentParams, RegularityFailure> tournament_params(
    const Digraph& g) {
  const TeamStructure ts = require_team(g);
  const EdgeArcSplit split = edge_arc_split(g);
  if (!split.edge_graph.arcs.empty())
    throw InputError("team tournament requires girth >= 3: found symmetric "
                     "arc pair (" +
                     std::to_string(split.edge_graph.arcs.front().first) +
                     "," +
                     std::to_string(split.edge_graph.arcs.front().second) +
                     ")");
  long long k = 0;
  if (auto f = check_regular(g, k)) return *f;
  const PairData data = pair_data(g, split, ts);
  const Mat a = adjacency(g);
  const Mat m = multiply(a, a, g.n);
  std::array<long long, 5> coeffs{};
  if (auto f = decompose(m, g.n, data, 1, 1, coeffs)) return *f;
  if (coeffs[static_cast<int>(PairClass::Equal)] != 0) {
    RegularityFailure f;
    f.kind = RegularityFailure::Kind::NonConstant;
    f.product_i = 1;
    f.product_j = 1;
    f.cls = PairClass::Equal;
    f.second_count = coeffs[static_cast<int>(PairClass::Equal)];
    return f;
  }
  TournamentParams tp;
  tp.alpha = coeffs[static_cast<int>(PairClass::Arc)];
  tp.beta = coeffs[static_cast<int>(PairClass::ReverseArc)];
  tp.gamma = coeffs[static_cast<int>(PairClass::SamePart)];
  tp.m = ts.part_count();
  tp.r = *ts.equal_size;
  tp.k = k;
  return tp;
}

bool is_type2_tournament(const Digraph& g) {
  auto result = tournament_params(g);
  if (std::holds_alternative<RegularityFailure>(result))
    throw InputError("requires a doubly regular team tournament: " +
                     std::get<RegularityFailure>(result).describe());
  const auto& tp = std::get<TournamentParams>(result);
  if (tp.beta != tp.alpha || tp.r % 2 != 0) return false;
  const TeamStructure ts = multipartite_structure(g);
  for (int x = 0; x < g.n; ++x)
    for (int i = 0; i < ts.part_count(); ++i) {
      if (ts.part_of[x] == i) continue;
      long long count = 0;
      for (int y : ts.parts[i]) count += g.has_arc(x, y);
      if (count != tp.r / 2) return false;
    }
  return true;
}

std::array<long long, 3> type2_parameters(long long k, long long l) {
  if (k < 2 || l < 2) throw InputError("type2_parameters needs k, l >= 2");
  const long long a_num = (k - 2) * l;
  if (a_num % 4 != 0)
    throw InputError("(k-2)l/4 = " + std::to_string(a_num) +
                     "/4 is not an integer");
  const long long g_num = l * l * (k - 1);
  const long long g_den = 4 * (l - 1);
  if (g_num % g_den != 0)
    throw InputError("l^2(k-1)/(4(l-1)) = " + std::to_string(g_num) + "/" +
                     std::to_string(g_den) + " is not an integer");
  return {a_num / 4, a_num / 4, g_num / g_den};
}

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

PairWitness classify_pair(const EdgeArcSplit& split,
                          const TeamStructure& ts, int i, int j) {
  PairWitness w;
  w.i = i;
  w.j = j;
  const auto& vi = ts.parts[i];
  const auto& vj = ts.parts[j];

  bool all_edges = true;
  for (int x : vi)
    for (int y : vj)
      if (!split.edge_graph.has_arc(x, y)) all_edges = false;
  if (all_edges) {
    w.tag = 1;
    return w;
  }

  // Both sides split into edge and arc blocks: group V_i by edge
  // neighbourhood in V_j and check the arc blocks in either orientation.
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int x : vi) {
    std::vector<int> e;
    for (int y : vj)
      if (split.edge_graph.has_arc(x, y)) e.push_back(y);
    groups[sorted(std::move(e))].push_back(x);
  }
  if (groups.size() == 2) {
    auto it = groups.begin();
    const auto& [p, xi1] = *it;
    ++it;
    const auto& [q, xi2] = *it;
    std::vector<int> uni;
    std::set_union(p.begin(), p.end(), q.begin(), q.end(),
                   std::back_inserter(uni));
    if (!p.empty() && !q.empty() &&
        uni.size() == p.size() + q.size() && uni == sorted(vj)) {
      const auto arcs_block = [&](const std::vector<int>& from,
                                  const std::vector<int>& to) {
        for (int x : from)
          for (int y : to)
            if (!split.arc_digraph.has_arc(x, y)) return false;
        return true;
      };
      if (arcs_block(xi1, q) && arcs_block(p, xi2)) {
        w.tag = 3;
        w.i_first = xi1;
        w.i_second = xi2;
        w.j_first = p;
        w.j_second = q;
        return w;
      }
      if (arcs_block(xi2, p) && arcs_block(q, xi1)) {
        w.tag = 3;
        w.i_first = xi2;
        w.i_second = xi1;
        w.j_first = q;
        w.j_second = p;
        return w;
      }
    }
  }

  // One side splits with full pure-arc blocks, trying V_i first and then
  // V_j as the definition allows either orientation.
  const auto full_arc_split = [&](const std::vector<int>& side,
                                  const std::vector<int>& other,
                                  std::vector<int>& first,
                                  std::vector<int>& second) {
    first.clear();
    second.clear();
    for (int x : side) {
      bool all_out = true, all_in = true;
      for (int y : other) {
        all_out = all_out && split.arc_digraph.has_arc(x, y);
        all_in = all_in && split.arc_digraph.has_arc(y, x);
      }
      if (all_out)
        first.push_back(x);
      else if (all_in)
        second.push_back(x);
      else
        return false;
    }
    return !first.empty() && !second.empty();
  };
  if (full_arc_split(vi, vj, w.i_first, w.i_second)) {
    w.tag = 2;
    return w;
  }
  if (full_arc_split(vj, vi, w.j_first, w.j_second)) {
    w.tag = 2;
    return w;
  }
  w.tag = 0;
  return w;
}

namespace {

// Constant |{y in V_j : (x,y) in rel}| over x in V_i, or nullopt.
std::optional<long long> constant_count(const Digraph& rel,
                                        const std::vector<int>& vi,
                                        const std::vector<int>& vj) {
  std::optional<long long> value;
  for (int x : vi) {
    long long count = 0;
    for (int y : vj) count += rel.has_arc(x, y);
    if (!value)
      value = count;
    else if (*value != count)
      return std::nullopt;
  }
  return value;
}

}  // namespace

TypeClassification classify_with_params(const Digraph& g,
                                        const TeamStructure& ts,
                                        const EdgeArcSplit& split,
                                        const DoublyRegularParams& params) {
  TypeClassification out;
  out.params = params;
  out.delta = params.delta();
  const int m = params.m;
  const long long r = params.r;

  const auto fill_tables = [&]() {
    out.c.assign(m, std::vector<long long>(m, 0));
    out.e.assign(m, std::vector<long long>(m, 0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        const auto cij =
            constant_count(split.arc_digraph, ts.parts[i], ts.parts[j]);
        const auto eij =
            constant_count(split.edge_graph, ts.parts[i], ts.parts[j]);
        if (!cij)
          throw TheoremViolation(
              "delta = 0 but the pure-arc out-count into part " +
              std::to_string(j) + " is not constant over part " +
              std::to_string(i));
        if (!eij)
          throw TheoremViolation("edge count into part " + std::to_string(j) +
                                 " is not constant over part " +
                                 std::to_string(i));
        out.c[i][j] = *cij;
        out.e[i][j] = *eij;
      }
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        if (out.c[i][j] != out.c[j][i] ||
            2 * out.c[i][j] != r - out.e[i][j])
          throw TheoremViolation(
              "Type II condition fails on parts (" + std::to_string(i) + "," +
              std::to_string(j) + "): c_ij=" + std::to_string(out.c[i][j]) +
              " c_ji=" + std::to_string(out.c[j][i]) +
              " e_ij=" + std::to_string(out.e[i][j]) +
              " r=" + std::to_string(r));
      }
  };

  if (!out.delta) {
    out.verdict = TeamType::TypeII;
    fill_tables();
    return out;
  }

  const long long delta = *out.delta;
  if (delta == r) {
    out.verdict = TeamType::TypeI;
    std::vector<Arc> base_arcs;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const auto block = [&](const Digraph& rel, int pi, int pj) {
          for (int x : ts.parts[pi])
            for (int y : ts.parts[pj])
              if (!rel.has_arc(x, y)) return false;
          return true;
        };
        if (block(split.edge_graph, i, j)) {
          base_arcs.emplace_back(i, j);
          base_arcs.emplace_back(j, i);
        } else if (block(split.arc_digraph, i, j)) {
          base_arcs.emplace_back(i, j);
        } else if (block(split.arc_digraph, j, i)) {
          base_arcs.emplace_back(j, i);
        } else {
          throw TheoremViolation(
              "delta = r but parts (" + std::to_string(i) + "," +
              std::to_string(j) + ") do not form a uniform block");
        }
      }
    Digraph base = build_digraph(m, std::move(base_arcs));
    const Digraph recon = coclique_extension(base, static_cast<int>(r));
    std::vector<int> map(g.n);
    for (int p = 0; p < m; ++p)
      for (int s = 0; s < r; ++s) map[p * r + s] = ts.parts[p][s];
    if (!is_isomorphism_map(recon, g, map))
      throw TheoremViolation(
          "delta = r but the digraph is not the r-coclique extension of its "
          "block digraph");
    out.base = std::move(base);
    out.base_map = std::move(map);
    return out;
  }
  if (delta == 0) {
    out.verdict = TeamType::TypeII;
    fill_tables();
    return out;
  }
  if (r % 2 == 0 && delta == r / 2) {
    out.verdict = TeamType::TypeIII;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        PairWitness w = classify_pair(split, ts, i, j);
        if (w.tag == 0)
          throw TheoremViolation("delta = r/2 but parts (" +
                                 std::to_string(i) + "," + std::to_string(j) +
                                 ") match none of the three Type III cases");
        out.pairs.push_back(std::move(w));
      }
    return out;
  }
  throw TheoremViolation("delta = " + std::to_string(delta) +
                         " lies outside {0, r/2, r} for r = " +
                         std::to_string(r));
}

TypeClassification classify_type(const Digraph& g) {
  auto result = doubly_regular_params(g);
  if (std::holds_alternative<RegularityFailure>(result))
    throw InputError("classification requires a doubly regular digraph: " +
                     std::get<RegularityFailure>(result).describe());
  const TeamStructure ts = multipartite_structure(g);
  const EdgeArcSplit split = edge_arc_split(g);
  return classify_with_params(g, ts, split,
                              std::get<DoublyRegularParams>(result));
}

std::vector<BridgeInstance> bridge_instances(const AssociationScheme& s) {
  std::vector<BridgeInstance> out;
  if (s.class_count() != 5) return out;
  std::vector<std::pair<int, int>> nonsym;
  std::vector<int> sym;
  for (int i = 1; i < 5; ++i) {
    if (s.converse[i] == i)
      sym.push_back(i);
    else if (i < s.converse[i])
      nonsym.emplace_back(i, s.converse[i]);
  }
  if (nonsym.size() != 1 || sym.size() != 2) return out;
  const auto [r1, r2] = nonsym.front();

  for (int pick = 0; pick < 2; ++pick) {
    const int r3 = sym[pick];
    const int r4 = sym[1 - pick];
    // R0 ∪ R4 must be an equivalence: the square of R4 stays inside it.
    bool clique_components = true;
    for (int l = 0; l < 5; ++l)
      if (l != 0 && l != r4 && s.p[r4][r4][l] > 0) clique_components = false;
    if (!clique_components) continue;
    const long long r = s.valencies[r4] + 1;
    if (r < 2 || s.n / r < 2 || s.n % r != 0) continue;

    std::vector<Arc> arcs(s.classes[r1]);
    arcs.insert(arcs.end(), s.classes[r3].begin(), s.classes[r3].end());
    Digraph d = build_digraph(s.n, std::move(arcs));
    try {
      two_way_partition(d);
    } catch (const NotStronglyConnectedError&) {
      continue;
    }
    out.push_back(BridgeInstance{r1, r2, r3, r4, std::move(d)});
  }
  return out;
}

}  // namespace wdrd
