#include "wdrd/io.hpp"

#include <istream>
#include <sstream>

#include "wdrd/error.hpp"

namespace wdrd {

json to_json(const Digraph& g) {
  json arcs = json::array();
  for (const auto& [u, v] : g.arcs) arcs.push_back(json::array({u, v}));
  return json{{"n", g.n}, {"arcs", arcs}};
}

Digraph digraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
    throw InputError("digraph JSON needs integer 'n' and array 'arcs'");
  if (!j["n"].is_number_integer()) throw InputError("'n' must be an integer");
  std::vector<Arc> arcs;
  for (const auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
        !a[1].is_number_integer())
      throw InputError("each arc must be a two-element integer array");
    arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  return build_digraph(j["n"].get<int>(), std::move(arcs));
}

std::string to_matrix_text(const Digraph& g) {
  std::string out = std::to_string(g.n) + "\n";
  for (int u = 0; u < g.n; ++u) {
    for (int v = 0; v < g.n; ++v) out += g.has_arc(u, v) ? '1' : '0';
    out += '\n';
  }
  return out;
}

Digraph digraph_from_matrix_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n)) throw InputError("matrix text must start with the order n");
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    std::string row;
    if (!(in >> row) || static_cast<int>(row.size()) != n)
      throw InputError("matrix row " + std::to_string(u) + " must have " +
                       std::to_string(n) + " characters");
    for (int v = 0; v < n; ++v) {
      if (row[v] != '0' && row[v] != '1')
        throw InputError("matrix entries must be 0 or 1");
      if (row[v] == '1') arcs.emplace_back(u, v);
    }
  }
  return build_digraph(n, std::move(arcs));
}

Digraph read_digraph(std::istream& in, const std::string& format) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::string fmt = format;
  if (fmt == "auto") {
    const auto pos = text.find_first_not_of(" \t\r\n");
    fmt = (pos != std::string::npos && text[pos] == '{') ? "json" : "matrix";
  }
  if (fmt == "json") {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("invalid JSON: ") + e.what());
    }
    return digraph_from_json(j);
  }
  if (fmt == "matrix") return digraph_from_matrix_text(text);
  throw InputError("unknown digraph format '" + format + "'");
}

json to_json(const TeamStructure& ts) {
  json parts = json::array();
  for (const auto& part : ts.parts) parts.push_back(part);
  json j{{"parts", parts},
         {"sizes", ts.sizes},
         {"semicomplete", ts.semicomplete}};
  j["equal_size"] = ts.equal_size ? json(*ts.equal_size) : json(nullptr);
  return j;
}

json to_json(const ConstancyFailure& f) {
  return json{
      {"i", json::array({f.label_i.first, f.label_i.second})},
      {"j", json::array({f.label_j.first, f.label_j.second})},
      {"l", json::array({f.label_l.first, f.label_l.second})},
      {"first_pair", json::array({f.first_pair.first, f.first_pair.second})},
      {"second_pair",
       json::array({f.second_pair.first, f.second_pair.second})},
      {"first_count", f.first_count},
      {"second_count", f.second_count},
      {"message", f.describe()}};
}

json to_json(const AssociationScheme& s) {
  json classes = json::array();
  for (const auto& cls : s.classes) {
    json pairs = json::array();
    for (const auto& [x, y] : cls) pairs.push_back(json::array({x, y}));
    classes.push_back(pairs);
  }
  return json{{"n", s.n},
              {"classes", classes},
              {"converse", s.converse},
              {"tensor", s.p},
              {"valencies", s.valencies}};
}

json to_json(const WdrdReport& r) {
  json classes = json::array();
  for (const auto& cs : r.classes) {
    json c{{"label", json::array({cs.label.first, cs.label.second})},
           {"size", cs.size}};
    c["valency"] = cs.valency >= 0 ? json(cs.valency) : json(nullptr);
    classes.push_back(c);
  }
  json j{{"strongly_connected", r.strongly_connected},
         {"is_scheme", r.is_scheme},
         {"is_nonsymmetric", r.is_nonsymmetric},
         {"is_wdrd", r.is_wdrd},
         {"is_commutative", r.is_commutative},
         {"t_set", r.t_set},
         {"t_set_informational", r.t_set_informational},
         {"classes", classes}};
  j["failure"] = r.failure ? to_json(*r.failure) : json(nullptr);
  j["unreachable"] =
      r.unreachable_witness
          ? json(json::array(
                {r.unreachable_witness->first, r.unreachable_witness->second}))
          : json(nullptr);
  return j;
}

json to_json(const IdentityViolation& v) {
  return json{{"identity", v.identity},
              {"indices", v.indices},
              {"lhs", v.lhs},
              {"rhs", v.rhs}};
}

json to_json(const RegularityFailure& f) {
  json j{{"message", f.describe()}};
  switch (f.kind) {
    case RegularityFailure::Kind::NonRegular:
      j["kind"] = "non-regular";
      j["vertices"] = json::array({f.vertex_a, f.vertex_b});
      j["degrees"] = json::array({f.degree_a, f.degree_b});
      break;
    case RegularityFailure::Kind::NonConstant:
      j["kind"] = "non-constant";
      j["product"] = json::array({f.product_i, f.product_j});
      j["class"] = pair_class_name(f.cls);
      j["pairs"] = json::array(
          {json::array({f.first_pair.first, f.first_pair.second}),
           json::array({f.second_pair.first, f.second_pair.second})});
      j["counts"] = json::array({f.first_count, f.second_count});
      break;
    case RegularityFailure::Kind::MixedMismatch:
      j["kind"] = "mixed-product-mismatch";
      j["class"] = pair_class_name(f.cls);
      j["counts"] = json::array({f.first_count, f.second_count});
      break;
  }
  return j;
}

json to_json(const DoublyRegularParams& p) {
  json j{{"t", p.t}, {"m", p.m}, {"r", p.r}, {"k", p.k},
         {"arcs_empty", p.arcs_empty}};
  for (int s = 0; s < 3; ++s) {
    const std::string suffix = "_" + std::to_string(s);
    j["alpha" + suffix] = p.alpha[s];
    j["beta" + suffix] = p.beta[s];
    j["gamma" + suffix] = p.gamma[s];
    j["eta" + suffix] = p.eta[s];
  }
  return j;
}

json to_json(const TypeClassification& c) {
  json j = to_json(c.params);
  j["verdict"] = team_type_name(c.verdict);
  j["delta"] = c.delta ? json(*c.delta) : json(nullptr);
  j["indeterminate_delta"] = !c.delta.has_value();
  j["base"] = c.base ? to_json(*c.base) : json(nullptr);
  j["base_map"] = c.base_map ? json(*c.base_map) : json(nullptr);
  j["c_table"] = c.c.empty() ? json(nullptr) : json(c.c);
  j["e_table"] = c.e.empty() ? json(nullptr) : json(c.e);
  json pairs = json::array();
  for (const auto& w : c.pairs) {
    pairs.push_back(json{{"parts", json::array({w.i, w.j})},
                         {"case", w.tag},
                         {"i_first", w.i_first},
                         {"i_second", w.i_second},
                         {"j_first", w.j_first},
                         {"j_second", w.j_second}});
  }
  j["pairs"] = pairs;
  return j;
}

json to_json(const FamilyMatch& m) {
  json params{{"extension", m.extension}, {"base_name", m.base_name}};
  params["team"] = m.team ? json(json::array({m.team->first, m.team->second}))
                          : json(nullptr);
  return json{{"family", m.family},
              {"params", params},
              {"base", to_json(m.base)},
              {"iso_map", m.iso_map}};
}

json to_json(const SearchHit& h) {
  json connection = json::array();
  for (const auto& e : h.connection) connection.push_back(e);
  json j{{"factors", h.factors},
         {"connection", connection},
         {"report", to_json(h.report)},
         {"team", to_json(h.structure)}};
  j["doubly_regular"] = h.params ? to_json(*h.params) : json(nullptr);
  j["classification"] =
      h.classification ? to_json(*h.classification) : json(nullptr);
  j["family"] = h.family ? to_json(*h.family) : json(nullptr);
  return j;
}

}  // namespace wdrd
