#include "cyclecut/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cyclecut/connectivity.hpp"
#include "cyclecut/constructions.hpp"
#include "cyclecut/cuts.hpp"
#include "cyclecut/neighborhood.hpp"
#include "cyclecut/scan.hpp"
#include "cyclecut/search.hpp"
#include "cyclecut/serialize.hpp"
#include "cyclecut/verifier.hpp"

namespace cyclecut {

namespace {

std::string format_graph(const Graph& g, const std::string& format) {
  if (format == "g6") return encode_graph6(g) + "\n";
  if (format == "edges") return encode_edge_list(g);
  if (format == "json") {
    Record j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    Record edges = Record::array();
    for (auto [u, v] : g.edges()) edges.push_back(Record::array({u, v}));
    j["edges"] = edges;
    return j.dump() + "\n";
  }
  throw std::invalid_argument("unknown graph format '" + format + "'");
}

// the "graph" field of a record, honoring the selected serialization
Record graph_field(const Graph& g, const std::string& format) {
  if (format == "g6") return encode_graph6(g);
  if (format == "edges") return encode_edge_list(g);
  if (format == "json") {
    Record j;
    j["n"] = g.vertex_count();
    Record edges = Record::array();
    for (auto [u, v] : g.edges()) edges.push_back(Record::array({u, v}));
    j["edges"] = edges;
    return j;
  }
  throw std::invalid_argument("unknown graph format '" + format + "'");
}

std::vector<Graph> read_graphs(std::istream& in, const std::string& format) {
  std::vector<Graph> out;
  if (format == "g6") {
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        out.push_back(parse_graph6(line));
      } catch (const parse_error& e) {
        throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    return out;
  }
  if (format == "edges") {
    long long n, m;
    while (in >> n >> m) {
      if (n < 0 || m < 0) throw parse_error("edge list: bad header values");
      EdgeList edges;
      for (long long k = 0; k < m; ++k) {
        long long u, v;
        if (!(in >> u >> v)) throw parse_error("edge list: truncated edge section");
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
          throw parse_error("edge list: bad edge " + std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      }
      out.emplace_back(static_cast<int>(n), edges);
    }
    return out;
  }
  throw std::invalid_argument("unknown input format '" + format + "'");
}

Graph parse_base_spec(const std::string& spec, std::istream& in) {
  if (spec == "-") {
    std::vector<Graph> graphs = read_graphs(in, "g6");
    if (graphs.size() != 1)
      throw std::invalid_argument("--base -: expected exactly one graph6 line on stdin");
    return graphs[0];
  }
  if (spec.rfind("g6:", 0) == 0) return parse_graph6(spec.substr(3));
  return named_graph(spec);
}

VertexSet parse_set(const std::string& csv, int host_n) {
  VertexSet s(host_n);
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    s.add(std::stoi(item));
  }
  return s;
}

int cmd_construct(const std::string& what, const std::string& base_spec, const std::string& format,
                  std::istream& in, std::ostream& out) {
  Graph g = [&] {
    if (what == "k4sub") {
      if (base_spec.empty())
        throw std::invalid_argument("construct k4sub: --base is required (e.g. --base prism:3)");
      auto [result, map] = k4_substitution(parse_base_spec(base_spec, in));
      (void)map;
      return result;
    }
    return named_graph(what);
  }();
  out << format_graph(g, format);
  return kExitOk;
}

int cmd_check(const std::string& property, const std::string& set_csv, const std::string& input,
              const std::string& format, std::istream& in, std::ostream& out) {
  std::vector<Graph> graphs = read_graphs(in, input);
  for (const Graph& g : graphs) {
    Record rec;
    rec["graph"] = graph_field(g, format);
    rec["property"] = property;
    bool value;
    if (property == "three-connected") {
      value = is_k_connected(g, 3);
    } else if (property == "nbhd-cycles") {
      value = all_neighborhoods_cyclic(g);
    } else if (property.rfind("min-degree:", 0) == 0) {
      int k = std::stoi(property.substr(11));
      value = g.vertex_count() > 0 && g.min_degree() >= k;
    } else if (property == "independent-set") {
      value = is_independent_set(g, parse_set(set_csv, g.vertex_count()));
    } else if (property == "forest") {
      value = induces_forest(g, parse_set(set_csv, g.vertex_count()));
    } else {
      throw std::invalid_argument("unknown property '" + property + "'");
    }
    rec["value"] = value;
    out << rec.dump() << "\n";
  }
  return kExitOk;
}

int cmd_cut(const std::string& kind, const std::string& input, const std::string& format,
            std::istream& in, std::ostream& out) {
  std::vector<Graph> graphs = read_graphs(in, input);
  for (const Graph& g : graphs) {
    auto cert = kind == "independent" ? find_independent_cut(g) : find_forest_cut(g);
    Record rec;
    rec["graph"] = graph_field(g, format);
    rec["kind"] = kind;
    rec.update(cut_certificate_json(cert));
    out << rec.dump() << "\n";
  }
  return kExitOk;
}

int cmd_verify_proof(const std::string& input, const std::string& format, std::istream& in,
                     std::ostream& out) {
  std::vector<Graph> graphs = read_graphs(in, input);
  bool violation = false;
  for (const Graph& g : graphs) {
    Record rec;
    rec["graph"] = graph_field(g, format);
    try {
      EdgeBoundResult res = verify_edge_bound(g);
      rec["status"] = "ok";
      rec["removed_twins"] = res.removed_twins;
      rec.update(bound_report_json(res.report));
    } catch (const hypothesis_error& e) {
      violation = true;
      rec["status"] = "hypothesis-violation";
      rec["hypothesis"] = e.hypothesis;
      rec["message"] = e.what();
    }
    out << rec.dump() << "\n";
  }
  return violation ? kExitHypothesisViolation : kExitOk;
}

int cmd_search(const std::string& harness, int n, const std::string& source_path, int jobs,
               std::istream& in, std::ostream& out) {
  std::ifstream file;
  GraphSource source = GraphSource::native();
  if (!source_path.empty()) {
    if (source_path == "-") {
      source = GraphSource::stream(in);
    } else {
      file.open(source_path);
      if (!file) throw std::invalid_argument("cannot open graph6 source '" + source_path + "'");
      source = GraphSource::stream(file);
    }
  }
  SearchReport report;
  if (harness == "chen-yu")
    report = run_chen_yu_check(n, source, jobs);
  else if (harness == "forest-cut")
    report = run_forest_cut_check(n, source, jobs);
  else if (harness == "extremal")
    report = run_extremal_search(n, source, jobs);
  else
    throw std::invalid_argument("unknown harness '" + harness + "'");
  out << search_report_json(report).dump() << "\n";
  return report.counterexamples.empty() ? kExitOk : kExitCounterexamplesFound;
}

int cmd_stats(const EnumerationConstraints& c, int jobs, std::ostream& out) {
  std::vector<Graph> graphs = enumerate_graphs(c, jobs);
  Record rec;
  rec["constraints"] = constraints_json(c);
  rec["count"] = graphs.size();
  out << rec.dump() << "\n";
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"graph toolkit for independent cuts, forest cuts, and the 15n/8 edge bound"};
  app.name("cyclecut");
  app.require_subcommand(1);

  std::string format = "g6";
  std::string input = "g6";
  int jobs = 0;  // 0: CYCLECUT_JOBS env or 1

  auto* construct = app.add_subcommand(
      "construct", "emit a named graph (book:K, prism:T, complete:N, cycle:N, octahedron, petersen, k4sub)");
  std::string what, base_spec;
  construct->add_option("what", what, "family name, parameter after ':' where needed")->required();
  construct->add_option("--base", base_spec,
                        "k4sub base: named graph, 'g6:STRING', or '-' for one graph6 line on stdin");
  construct->add_option("--format", format, "g6|edges|json");

  auto* check = app.add_subcommand("check", "evaluate a property for each graph6 line on stdin");
  std::string property, set_csv;
  check->add_option("--property", property,
                    "three-connected|nbhd-cycles|min-degree:K|independent-set|forest")
      ->required();
  check->add_option("--set", set_csv, "comma-separated vertices for independent-set/forest");
  check->add_option("--input", input, "g6|edges");
  check->add_option("--format", format, "graph serialization inside records: g6|edges|json");

  auto* cut = app.add_subcommand("cut", "search a minimum cut of the given kind for each input graph");
  std::string kind;
  cut->add_option("--kind", kind, "independent|forest")->required()
      ->check(CLI::IsMember({"independent", "forest"}));
  cut->add_option("--input", input, "g6|edges");
  cut->add_option("--format", format, "graph serialization inside records: g6|edges|json");

  auto* verify = app.add_subcommand("verify-proof", "run the edge-bound verification pipeline per graph");
  verify->add_option("--input", input, "g6|edges");
  verify->add_option("--format", format, "graph serialization inside records: g6|edges|json");

  auto* search = app.add_subcommand("search", "run an exhaustive harness over small graphs");
  std::string harness, source_path;
  int n = 0;
  search->add_option("--harness", harness, "chen-yu|forest-cut|extremal")->required();
  search->add_option("--n", n, "vertex count")->required();
  search->add_option("--source", source_path, "graph6 file ('-' for stdin); default: native generation");
  search->add_option("--jobs", jobs, "scan parallelism (default: CYCLECUT_JOBS or 1)");

  auto* stats = app.add_subcommand("stats", "count isomorphism classes meeting the constraints");
  EnumerationConstraints sc;
  int stats_min_degree = -1, stats_min_conn = -1, stats_max_edges = -1, stats_min_edges = -1;
  stats->add_option("--n", sc.n, "vertex count (native cap applies)")->required();
  stats->add_flag("--connected", sc.connected_only, "connected graphs only");
  stats->add_option("--min-degree", stats_min_degree, "minimum degree");
  stats->add_option("--min-connectivity", stats_min_conn, "minimum vertex connectivity");
  stats->add_option("--max-edges", stats_max_edges, "maximum edge count");
  stats->add_option("--min-edges", stats_min_edges, "minimum edge count");
  stats->add_flag("--nbhd-cycles", sc.require_neighborhood_cycles,
                  "every neighborhood contains a cycle");
  stats->add_option("--jobs", jobs, "generation parallelism");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "cyclecut: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (construct->parsed()) return cmd_construct(what, base_spec, format, in, out);
    if (check->parsed()) return cmd_check(property, set_csv, input, format, in, out);
    if (cut->parsed()) return cmd_cut(kind, input, format, in, out);
    if (verify->parsed()) return cmd_verify_proof(input, format, in, out);
    if (search->parsed()) return cmd_search(harness, n, source_path, jobs, in, out);
    if (stats->parsed()) {
      if (stats_min_degree >= 0) sc.min_degree = stats_min_degree;
      if (stats_min_conn >= 0) sc.min_connectivity = stats_min_conn;
      if (stats_max_edges >= 0) sc.max_edges = stats_max_edges;
      if (stats_min_edges >= 0) sc.min_edges = stats_min_edges;
      return cmd_stats(sc, jobs, out);
    }
  } catch (const std::exception& e) {
    err << "cyclecut: " << e.what() << "\n";
    return kExitInputError;
  }
  err << "cyclecut: no subcommand\n";
  return kExitInputError;
}

}  // namespace cyclecut
