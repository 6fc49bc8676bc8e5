#include "wdrd/scheme.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "wdrd/error.hpp"

namespace wdrd {

namespace {

using Mat = std::vector<long long>;

Mat adjacency(const std::vector<Arc>& cls, int n) {
  Mat a(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [x, y] : cls) a[x * n + y] = 1;
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

std::string label_str(std::pair<int, int> l) {
  return "(" + std::to_string(l.first) + "," + std::to_string(l.second) + ")";
}

}  // namespace

std::string ConstancyFailure::describe() const {
  return "count of |R_" + label_str(label_i) + "(x) ∩ R_" +
         label_str({label_j.second, label_j.first}) + "(y)| over class " +
         label_str(label_l) + " is not constant: pair (" +
         std::to_string(first_pair.first) + "," +
         std::to_string(first_pair.second) + ") gives " +
         std::to_string(first_count) + " but pair (" +
         std::to_string(second_pair.first) + "," +
         std::to_string(second_pair.second) + ") gives " +
         std::to_string(second_count);
}

int AssociationScheme::index_of(int a, int b) const {
  const auto it =
      std::lower_bound(labels.begin(), labels.end(), std::make_pair(a, b));
  if (it == labels.end() || *it != std::make_pair(a, b)) return -1;
  return static_cast<int>(it - labels.begin());
}

bool AssociationScheme::commutative() const {
  const int c = class_count();
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      for (int l = 0; l < c; ++l)
        if (p[i][j][l] != p[j][i][l]) return false;
  return true;
}

bool AssociationScheme::symmetric() const {
  for (int i = 0; i < class_count(); ++i)
    if (converse[i] != i) return false;
  return true;
}

std::variant<AssociationScheme, ConstancyFailure> intersection_tensor(
    const TwoWayPartition& part) {
  const int n = part.n;
  const int c = part.class_count();
  AssociationScheme s;
  s.n = n;
  s.labels = part.labels;
  s.classes = part.classes;
  s.converse.resize(c);
  for (int i = 0; i < c; ++i) {
    const int conv = part.index_of(part.labels[i].second, part.labels[i].first);
    if (conv < 0) throw InputError("partition is not converse-closed");
    s.converse[i] = conv;
  }
  if (s.labels.empty() || s.labels.front() != std::make_pair(0, 0))
    throw InputError("partition lacks the diagonal class");

  std::vector<Mat> a;
  a.reserve(c);
  for (int i = 0; i < c; ++i) a.push_back(adjacency(part.classes[i], n));

  s.p.assign(c, std::vector<std::vector<long long>>(
                    c, std::vector<long long>(c, 0)));
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) {
      const Mat m = multiply(a[i], a[j], n);
      for (int l = 0; l < c; ++l) {
        const auto& pairs = part.classes[l];
        const long long ref =
            m[pairs.front().first * n + pairs.front().second];
        for (const auto& [x, y] : pairs) {
          const long long count = m[x * n + y];
          if (count != ref) {
            ConstancyFailure f;
            f.i = i;
            f.j = j;
            f.l = l;
            f.label_i = s.labels[i];
            f.label_j = s.labels[j];
            f.label_l = s.labels[l];
            f.first_pair = pairs.front();
            f.second_pair = {x, y};
            f.first_count = ref;
            f.second_count = count;
            return f;
          }
        }
        s.p[i][j][l] = ref;
      }
    }
  s.valencies.resize(c);
  for (int i = 0; i < c; ++i) s.valencies[i] = s.p[i][s.converse[i]][0];
  return s;
}

SchemeReport verify_scheme(const TwoWayPartition& partition) {
  SchemeReport report;
  auto result = intersection_tensor(partition);
  if (std::holds_alternative<ConstancyFailure>(result)) {
    report.failure_witness = std::get<ConstancyFailure>(result);
    return report;
  }
  auto& scheme = std::get<AssociationScheme>(result);
  report.is_scheme = true;
  report.is_commutative = scheme.commutative();
  report.is_symmetric = scheme.symmetric();
  report.scheme = std::move(scheme);
  return report;
}

std::vector<IdentityViolation> intersection_identities(
    const AssociationScheme& s) {
  std::vector<IdentityViolation> out;
  const int c = s.class_count();
  const auto& p = s.p;
  const auto& k = s.valencies;

  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) {
      long long sum = 0;
      for (int l = 0; l < c; ++l) sum += p[i][j][l] * k[l];
      if (k[i] * k[j] != sum) out.push_back({1, {i, j}, k[i] * k[j], sum});
    }

  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      for (int l = 0; l < c; ++l) {
        const long long base = p[i][j][l] * k[l];
        const long long second = p[l][s.converse[j]][i] * k[i];
        const long long third = p[s.converse[i]][l][j] * k[j];
        if (base != second) out.push_back({2, {i, j, l}, base, second});
        if (base != third) out.push_back({2, {i, j, l}, base, third});
      }

  for (int i = 0; i < c; ++i)
    for (int l = 0; l < c; ++l) {
      long long sum = 0;
      for (int j = 0; j < c; ++j) sum += p[i][j][l];
      if (sum != k[i]) out.push_back({3, {i, l}, sum, k[i]});
    }

  for (int i = 0; i < c; ++i)
    for (int l = 0; l < c; ++l)
      for (int m = 0; m < c; ++m)
        for (int j = 0; j < c; ++j) {
          long long lhs = 0, rhs = 0;
          for (int r = 0; r < c; ++r) lhs += p[i][l][r] * p[m][r][j];
          for (int t = 0; t < c; ++t) rhs += p[m][i][t] * p[t][l][j];
          if (lhs != rhs) out.push_back({4, {i, l, m, j}, lhs, rhs});
        }
  return out;
}

bool ClosedSubset::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

ClosedSubset closure(const AssociationScheme& s,
                     const std::vector<int>& seed) {
  const int c = s.class_count();
  std::set<int> f{0};
  for (int i : seed) {
    if (i < 0 || i >= c) throw InputError("closure seed index out of range");
    f.insert(i);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : std::vector<int>(f.begin(), f.end()))
      for (int j : std::vector<int>(f.begin(), f.end())) {
        const int istar = s.converse[i];
        for (int l = 0; l < c; ++l)
          if (s.p[istar][j][l] > 0 && !f.count(l)) {
            f.insert(l);
            changed = true;
          }
      }
  }
  return ClosedSubset{std::vector<int>(f.begin(), f.end())};
}

bool is_closed(const AssociationScheme& s, const std::vector<int>& indices) {
  std::set<int> f(indices.begin(), indices.end());
  if (!f.count(0)) return false;
  for (int i : f) {
    if (i < 0 || i >= s.class_count()) return false;
    for (int j : f) {
      const int istar = s.converse[i];
      for (int l = 0; l < s.class_count(); ++l)
        if (s.p[istar][j][l] > 0 && !f.count(l)) return false;
    }
  }
  return true;
}

bool is_primitive(const AssociationScheme& s) {
  const int c = s.class_count();
  for (int i = 1; i < c; ++i)
    if (static_cast<int>(closure(s, {i}).indices.size()) != c) return false;
  return true;
}

std::vector<std::vector<int>> quotient_classes(const TwoWayPartition& part,
                                               const ClosedSubset& f) {
  const int n = part.n;
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (owner[x] >= 0) continue;
    std::vector<int> cls;
    for (int y = 0; y < n; ++y)
      if (f.contains(part.class_of(x, y))) cls.push_back(y);
    for (int y : cls) {
      if (owner[y] >= 0)
        throw InputError("closed-subset classes do not partition the vertices");
      owner[y] = static_cast<int>(classes.size());
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

Digraph quotient(const Digraph& g, const TwoWayPartition& partition,
                 const ClosedSubset& f) {
  auto result = intersection_tensor(partition);
  if (std::holds_alternative<ConstancyFailure>(result))
    throw InputError("quotient requires a partition forming an association "
                     "scheme: " +
                     std::get<ConstancyFailure>(result).describe());
  const auto& scheme = std::get<AssociationScheme>(result);
  if (!is_closed(scheme, f.indices))
    throw InputError("index set is not a closed subset");

  const auto classes = quotient_classes(partition, f);
  const std::size_t size = classes.front().size();
  for (const auto& cls : classes)
    if (cls.size() != size)
      throw InputError("quotient classes have unequal sizes");

  std::vector<int> owner(g.n);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int y : classes[c]) owner[y] = static_cast<int>(c);

  std::set<Arc> arcs;
  for (const auto& [u, v] : g.arcs)
    if (owner[u] != owner[v]) arcs.emplace(owner[u], owner[v]);
  return build_digraph(static_cast<int>(classes.size()),
                       std::vector<Arc>(arcs.begin(), arcs.end()));
}

}  // namespace wdrd
