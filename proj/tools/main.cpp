#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "wdrd/error.hpp"
#include "wdrd/io.hpp"

namespace {

struct IoOptions {
  std::string input;
  std::string builtin;
  std::string output;
  std::string in_format = "auto";
  std::string out_format = "json";
  bool verbose = false;
};

void add_input_flags(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--input", io.input, "digraph file (JSON or matrix text), or - for stdin");
  cmd->add_option("--builtin", io.builtin, "catalog digraph name");
  cmd->add_option("--in-format", io.in_format, "input format: auto|json|matrix")
      ->default_str("auto");
}

void add_output_flags(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--output", io.output, "output file (default stdout)");
}

wdrd::Digraph load_path(const std::string& path, const std::string& format) {
  if (path == "-") return wdrd::read_digraph(std::cin, format);
  std::ifstream file(path);
  if (!file) throw wdrd::InputError("cannot open '" + path + "'");
  return wdrd::read_digraph(file, format);
}

wdrd::Digraph load_digraph(const IoOptions& io) {
  if (!io.builtin.empty() && !io.input.empty())
    throw wdrd::InputError("give exactly one of --input and --builtin");
  if (!io.builtin.empty()) return wdrd::builtin(io.builtin).digraph;
  if (io.input.empty())
    throw wdrd::InputError("give exactly one of --input and --builtin");
  return load_path(io.input, io.in_format);
}

// A base argument is a catalog name unless it names an existing file.
wdrd::Digraph load_base(const std::string& spec) {
  if (spec.empty()) throw wdrd::InputError("missing --base");
  if (std::ifstream probe(spec); probe)
    return wdrd::read_digraph(probe, "auto");
  return wdrd::builtin(spec).digraph;
}

void emit_text(const IoOptions& io, const std::string& text) {
  if (io.output.empty() || io.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(io.output);
  if (!file) throw wdrd::InputError("cannot write '" + io.output + "'");
  file << text;
}

void emit_digraph(const IoOptions& io, const wdrd::Digraph& g) {
  if (io.out_format == "matrix")
    emit_text(io, wdrd::to_matrix_text(g));
  else
    emit_text(io, wdrd::to_json(g).dump(2) + "\n");
}

wdrd::json with_meta(wdrd::json j, const wdrd::WdrdReport* report) {
  j["tool_version"] = wdrd::kToolVersion;
  if (report && report->partition) {
    wdrd::json order = wdrd::json::array();
    for (const auto& [a, b] : report->partition->labels)
      order.push_back(wdrd::json::array({a, b}));
    j["class_order"] = order;
  }
  return j;
}

std::vector<std::pair<int, int>> parse_labels(const std::string& spec) {
  std::vector<std::pair<int, int>> labels;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ';')) {
    const auto comma = token.find(',');
    if (comma == std::string::npos)
      throw wdrd::InputError("label '" + token + "' must look like a,b");
    try {
      labels.emplace_back(std::stoi(token.substr(0, comma)),
                          std::stoi(token.substr(comma + 1)));
    } catch (const std::exception&) {
      throw wdrd::InputError("label '" + token + "' must look like a,b");
    }
  }
  if (labels.empty()) throw wdrd::InputError("--over needs at least one label");
  return labels;
}

int cmd_gen(const IoOptions& io, int family, int n, int l,
            const std::string& base_spec, const std::string& builtin_name) {
  if (!builtin_name.empty() && family != 0)
    throw wdrd::InputError("gen takes either --builtin or --family, not both");
  wdrd::Digraph g;
  if (!builtin_name.empty()) {
    g = wdrd::builtin(builtin_name).digraph;
  } else {
    switch (family) {
      case 1: g = wdrd::family1(n); break;
      case 2: g = wdrd::family2(l, load_base(base_spec)); break;
      case 3: g = wdrd::family3(n, load_base(base_spec)); break;
      case 4: g = wdrd::family4(n, load_base(base_spec)); break;
      case 5: g = wdrd::family5(load_base(base_spec)); break;
      default:
        throw wdrd::InputError("gen needs --builtin or --family 1..5");
    }
  }
  emit_digraph(io, g);
  return 0;
}

int cmd_verify(const IoOptions& io) {
  const wdrd::Digraph g = load_digraph(io);
  const wdrd::WdrdReport report = wdrd::verify_wdrd(g);
  emit_text(io, with_meta(wdrd::to_json(report), &report).dump(2) + "\n");
  return report.is_wdrd ? 0 : 1;
}

int cmd_scheme(const IoOptions& io) {
  const wdrd::Digraph g = load_digraph(io);
  wdrd::json out;
  out["tool_version"] = wdrd::kToolVersion;
  wdrd::TwoWayPartition partition;
  try {
    partition = wdrd::two_way_partition(g);
  } catch (const wdrd::NotStronglyConnectedError& e) {
    out["is_scheme"] = false;
    out["error"] = e.what();
    emit_text(io, out.dump(2) + "\n");
    return 1;
  }
  const wdrd::SchemeReport report = wdrd::verify_scheme(partition);
  out["is_scheme"] = report.is_scheme;
  out["is_commutative"] = report.is_commutative;
  out["is_symmetric"] = report.is_symmetric;
  wdrd::json order = wdrd::json::array();
  for (const auto& [a, b] : partition.labels)
    order.push_back(wdrd::json::array({a, b}));
  out["class_order"] = order;
  out["failure"] = report.failure_witness
                       ? wdrd::to_json(*report.failure_witness)
                       : wdrd::json(nullptr);
  if (report.scheme) {
    out["scheme"] = wdrd::to_json(*report.scheme);
    wdrd::json violations = wdrd::json::array();
    for (const auto& v : wdrd::intersection_identities(*report.scheme))
      violations.push_back(wdrd::to_json(v));
    out["identity_violations"] = violations;
  } else {
    out["scheme"] = nullptr;
  }
  emit_text(io, out.dump(2) + "\n");
  return report.is_scheme ? 0 : 1;
}

int cmd_classify(const IoOptions& io) {
  const wdrd::Digraph g = load_digraph(io);
  wdrd::json out;
  out["tool_version"] = wdrd::kToolVersion;
  int code = 0;

  wdrd::TeamStructure ts;
  try {
    ts = wdrd::multipartite_structure(g);
  } catch (const wdrd::InputError& e) {
    out["team"] = nullptr;
    out["error"] = e.what();
    emit_text(io, out.dump(2) + "\n");
    return 1;
  }
  out["team"] = wdrd::to_json(ts);

  if (!ts.equal_size || *ts.equal_size < 2) {
    out["doubly_regular"] = nullptr;
    out["error"] = "not an (m,r)-team digraph: part sizes must be equal and "
                   ">= 2";
    code = 1;
  } else {
    const auto params = wdrd::doubly_regular_params(g);
    if (std::holds_alternative<wdrd::RegularityFailure>(params)) {
      out["doubly_regular"] =
          wdrd::to_json(std::get<wdrd::RegularityFailure>(params));
      code = 1;
    } else {
      const auto& p = std::get<wdrd::DoublyRegularParams>(params);
      const auto split = wdrd::edge_arc_split(g);
      const auto cls = wdrd::classify_with_params(g, ts, split, p);
      out["doubly_regular"] = wdrd::to_json(p);
      out["classification"] = wdrd::to_json(cls);
      out["verdict"] = wdrd::team_type_name(cls.verdict);
      if (split.edge_graph.arcs.empty()) {
        const auto tp = wdrd::tournament_params(g);
        if (std::holds_alternative<wdrd::TournamentParams>(tp)) {
          const auto& t = std::get<wdrd::TournamentParams>(tp);
          out["tournament_params"] =
              wdrd::json::array({t.alpha, t.beta, t.gamma});
          out["type2_check"] = wdrd::is_type2_tournament(g);
        }
      }
    }
  }

  const wdrd::WdrdReport report = wdrd::verify_wdrd(g);
  if (report.is_wdrd && report.is_commutative && ts.all_parts_at_least(2)) {
    const auto match = wdrd::identify(g, report);
    if (!match)
      throw wdrd::TheoremViolation(
          "commutative multipartite weakly distance-regular digraph matches "
          "no construction family");
    out["family"] = wdrd::to_json(*match);
  } else {
    out["family"] = nullptr;
    out["family_note"] = "family identification needs a commutative weakly "
                         "distance-regular digraph with all part sizes >= 2";
  }
  emit_text(io, with_meta(std::move(out), &report).dump(2) + "\n");
  return code;
}

int cmd_search(const IoOptions& io, int max_order,
               const std::string& predicate, bool reduced, bool cross,
               int budget) {
  wdrd::SearchOptions opts;
  opts.max_order = max_order;
  opts.reduced = reduced;
  opts.cross_validate = cross;
  if (budget > 0) opts.order_cap = budget;
  if (predicate == "default")
    opts.predicate = wdrd::SearchPredicate::CommutativeMultipartiteWdrd;
  else if (predicate == "team")
    opts.predicate = wdrd::SearchPredicate::DoublyRegularTeam;
  else
    throw wdrd::InputError("unknown predicate '" + predicate +
                           "' (use default or team)");
  const auto hits = wdrd::enumerate_cayley(opts);
  if (io.verbose)
    std::cerr << "search: " << hits.size() << " hits up to order "
              << max_order << "\n";
  std::string lines;
  for (const auto& hit : hits) lines += wdrd::to_json(hit).dump() + "\n";
  emit_text(io, lines);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"construct, verify, and classify weakly distance-regular "
               "digraphs and doubly regular team digraphs"};
  app.set_version_flag("--version", wdrd::kToolVersion);
  app.require_subcommand(1);

  int default_budget = 0;
  if (const char* env = std::getenv("WDRD_BUDGET"))
    default_budget = std::atoi(env);

  IoOptions io;
  app.add_flag("-v,--verbose", io.verbose, "notes on stderr");

  auto* gen = app.add_subcommand("gen", "construct a family member or builtin");
  int family = 0, gen_n = 1, gen_l = 2;
  std::string base_spec, gen_builtin;
  gen->add_option("--family", family, "construction family 1..5");
  gen->add_option("--n", gen_n, "coclique multiplicity (families 1,3,4)");
  gen->add_option("--l", gen_l, "coclique multiplicity (family 2)");
  gen->add_option("--base", base_spec,
                  "base digraph: catalog name or file (families 2-5)");
  gen->add_option("--builtin", gen_builtin, "catalog digraph name");
  gen->add_option("--format", io.out_format, "output format: json|matrix")
      ->default_str("json");
  add_output_flags(gen, io);

  auto* verify = app.add_subcommand("verify", "weakly distance-regular report");
  add_input_flags(verify, io);
  add_output_flags(verify, io);

  auto* scheme =
      app.add_subcommand("scheme", "association scheme and identity report");
  add_input_flags(scheme, io);
  add_output_flags(scheme, io);

  auto* classify =
      app.add_subcommand("classify", "team classification and family match");
  add_input_flags(classify, io);
  add_output_flags(classify, io);

  auto* product = app.add_subcommand("product", "lexicographic product");
  std::string with_spec;
  add_input_flags(product, io);
  product->add_option("--with", with_spec, "second digraph: catalog name or file")
      ->required();
  product->add_option("--format", io.out_format, "output format: json|matrix");
  add_output_flags(product, io);

  auto* extend = app.add_subcommand("extend", "coclique extension");
  int extend_n = 1;
  add_input_flags(extend, io);
  extend->add_option("--n", extend_n, "multiplicity")->required();
  extend->add_option("--format", io.out_format, "output format: json|matrix");
  add_output_flags(extend, io);

  auto* quotient_cmd =
      app.add_subcommand("quotient", "quotient over a closed subset");
  std::string over_spec;
  add_input_flags(quotient_cmd, io);
  quotient_cmd
      ->add_option("--over", over_spec,
                   "closed-subset labels, e.g. \"3,3\" or \"1,3;3,1;2,2\" "
                   "((0,0) is implied)")
      ->required();
  quotient_cmd->add_option("--format", io.out_format,
                           "output format: json|matrix");
  add_output_flags(quotient_cmd, io);

  auto* search = app.add_subcommand("search", "enumerate small Cayley digraphs");
  int max_order = 12, budget = default_budget;
  std::string predicate = "default";
  bool reduced = false, cross = false;
  search->add_option("--max-order", max_order, "largest group order");
  search->add_option("--predicate", predicate, "default|team");
  search->add_flag("--reduced", reduced, "prune converse-duplicate sets");
  search->add_flag("--cross-validate", cross,
                   "check the triple-loop oracle against the tensor");
  search->add_option("--budget", budget,
                     "order cap override (default 16; env WDRD_BUDGET)");
  add_output_flags(search, io);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (gen->parsed()) return cmd_gen(io, family, gen_n, gen_l, base_spec, gen_builtin);
  if (verify->parsed()) return cmd_verify(io);
  if (scheme->parsed()) return cmd_scheme(io);
  if (classify->parsed()) return cmd_classify(io);
  if (product->parsed()) {
    const wdrd::Digraph g = load_digraph(io);
    emit_digraph(io, wdrd::lexicographic_product(g, load_base(with_spec)));
    return 0;
  }
  if (extend->parsed()) {
    const wdrd::Digraph g = load_digraph(io);
    emit_digraph(io, wdrd::coclique_extension(g, extend_n));
    return 0;
  }
  if (quotient_cmd->parsed()) {
    const wdrd::Digraph g = load_digraph(io);
    const wdrd::TwoWayPartition partition = wdrd::two_way_partition(g);
    auto tensor = wdrd::intersection_tensor(partition);
    if (std::holds_alternative<wdrd::ConstancyFailure>(tensor))
      throw wdrd::InputError(
          "digraph partition is not an association scheme: " +
          std::get<wdrd::ConstancyFailure>(tensor).describe());
    const auto& s = std::get<wdrd::AssociationScheme>(tensor);
    std::vector<int> indices{0};
    for (const auto& [a, b] : parse_labels(over_spec)) {
      const int idx = s.index_of(a, b);
      if (idx < 0)
        throw wdrd::InputError("class (" + std::to_string(a) + "," +
                               std::to_string(b) + ") is not present");
      indices.push_back(idx);
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    emit_digraph(io,
                 wdrd::quotient(g, partition, wdrd::ClosedSubset{indices}));
    return 0;
  }
  if (search->parsed())
    return cmd_search(io, max_order, predicate, reduced, cross, budget);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const wdrd::TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 3;
  } catch (const wdrd::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
