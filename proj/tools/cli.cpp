#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "epg/error.hpp"
#include "epg/formulas.hpp"
#include "epg/group_graphs.hpp"
#include "epg/group_spec.hpp"
#include "epg/invariants.hpp"
#include "epg/report.hpp"
#include "epg/verify.hpp"

namespace epg::cli {

namespace {

struct Options {
  std::string spec;
  std::string table;
  std::string edges;
  std::string kind = "enhanced";
  std::string format = "edges";
  std::string source = "oracle";
  std::string range;
  std::string checks;
  std::size_t max_len = kDefaultHoleMaxLen;
  std::uint64_t budget = kDefaultNodeBudget;
  std::string out;
};

// Writes to --out when given, otherwise to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) fail(ErrorKind::kInvalidParameter, "cannot open '" + path + "' for writing");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

FiniteGroup load_group(const Options& o) {
  if (!o.table.empty()) {
    std::ifstream in(o.table);
    if (!in) fail(ErrorKind::kInvalidParameter, "cannot open '" + o.table + "'");
    return read_cayley_table(in, o.table);
  }
  if (o.spec.empty()) fail(ErrorKind::kParseError, "one of --spec or --table is required");
  return build_group(parse_group_spec(o.spec));
}

std::string group_label(const Options& o) {
  return o.table.empty() ? to_string(parse_group_spec(o.spec)) : o.table;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  std::string s = text;
  auto sep = s.find("..");
  std::size_t skip = 2;
  if (sep == std::string::npos) {
    sep = s.find(':');
    skip = 1;
  }
  try {
    if (sep == std::string::npos) {
      const std::uint64_t v = std::stoull(s);
      return {v, v};
    }
    return {std::stoull(s.substr(0, sep)), std::stoull(s.substr(sep + skip))};
  } catch (const std::logic_error&) {
    throw ParseError(0, "bad --range '" + text + "', expected A:B or A..B");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_generate(const Options& o, std::ostream& out) {
  const FiniteGroup g = load_group(o);
  Sink sink(o.out, out);
  write_cayley_table(*sink, g);
  return kOk;
}

int cmd_graph(const Options& o, std::ostream& out) {
  const FiniteGroup g = load_group(o);
  if (o.kind != "enhanced" && o.kind != "power")
    throw ParseError(0, "--kind must be 'enhanced' or 'power'");
  const auto graph = o.kind == "power" ? power_graph(g) : enhanced_power_graph(g);
  Sink sink(o.out, out);
  if (o.format == "edges") {
    write_edge_list(*sink, graph.graph);
  } else if (o.format == "dot") {
    write_dot(*sink, graph.graph, g.element_names(),
              std::string(o.kind == "power" ? "P(" : "Pe(") + g.label() + ")");
  } else {
    throw ParseError(0, "--format must be 'edges' or 'dot'");
  }
  return kOk;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  if (o.source != "oracle" && o.source != "formula" && o.source != "both")
    throw ParseError(0, "--source must be 'oracle', 'formula' or 'both'");
  const FiniteGroup g = load_group(o);
  const std::string label = group_label(o);
  Sink sink(o.out, out);

  if (o.source == "formula") {
    InvariantReport r = formula_report(g);
    r.group = label;
    *sink << r.to_key_value();
    return kOk;
  }
  if (o.source == "both") {
    InvariantReport f = formula_report(g);
    f.group = label;
    VerifyOptions vo;
    vo.oracle.node_budget = o.budget;
    vo.oracle.hole_max_len = o.max_len;
    const auto rows = verify_group(g, label, vo);
    *sink << f.to_key_value() << '\n';
    OracleOptions oo = vo.oracle;
    *sink << oracle_report(enhanced_power_graph(g).graph, label, oo).to_key_value() << '\n';
    *sink << verification_csv_header() << '\n';
    for (const auto& row : rows) *sink << to_csv(row) << '\n';
    return sweep_exit_status(rows);
  }
  OracleOptions oo;
  oo.node_budget = o.budget;
  oo.hole_max_len = o.max_len;
  const InvariantReport r = oracle_report(enhanced_power_graph(g).graph, label, oo);
  *sink << r.to_key_value();
  return r.skipped.empty() ? kOk : kInconclusive;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.spec.empty()) throw ParseError(0, "verify needs --spec FAMILY or abelian:P");
  if (o.range.empty()) throw ParseError(0, "verify needs --range A:B");
  SweepConfig cfg;
  const auto colon = o.spec.find(':');
  cfg.family = parse_family(o.spec.substr(0, colon));
  if (colon != std::string::npos) {
    if (cfg.family != Family::kAbelian)
      throw ParseError(colon, "only abelian sweeps take a prime restriction");
    try {
      cfg.prime = std::stoull(o.spec.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw ParseError(colon + 1, "expected a prime");
    }
  }
  std::tie(cfg.first, cfg.last) = parse_range(o.range);
  cfg.options.checks = split_list(o.checks);
  cfg.options.oracle.node_budget = o.budget;
  cfg.options.oracle.hole_max_len = o.max_len;

  const auto rows = run_sweep(cfg);
  Sink sink(o.out, out);
  *sink << verification_csv_header() << '\n';
  for (const auto& row : rows) *sink << to_csv(row) << '\n';
  return sweep_exit_status(rows);
}

int cmd_perfect(const Options& o, std::ostream& out) {
  SimpleGraph graph;
  std::vector<std::string> labels;
  std::optional<FiniteGroup> group;
  if (!o.edges.empty()) {
    std::ifstream in(o.edges);
    if (!in) fail(ErrorKind::kInvalidParameter, "cannot open '" + o.edges + "'");
    graph = read_edge_list(in);
  } else {
    group = load_group(o);
    graph = enhanced_power_graph(*group).graph;
    labels = group->element_names();
  }
  std::vector<Vertex> certificate;
  const PerfectVerdict verdict = perfect_verdict(graph, o.max_len, o.budget, &certificate);
  Sink sink(o.out, out);
  *sink << "verdict=" << to_string(verdict) << '\n';
  *sink << "max_len=" << o.max_len << '\n';
  *sink << "budget=" << o.budget << '\n';
  if (!certificate.empty()) {
    *sink << "certificate=";
    for (std::size_t i = 0; i < certificate.size(); ++i) {
      const Vertex v = certificate[i];
      *sink << (i ? " " : "") << (v < labels.size() ? labels[v] : std::to_string(v));
    }
    *sink << '\n';
  }
  return verdict == PerfectVerdict::kInconclusive ? kInconclusive : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enhanced power graphs of finite groups: construction, invariants, verification", "epg"};
  app.require_subcommand(1);
  Options o;

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--spec", o.spec, "group spec, e.g. dihedral:5 or product:(cyclic:2)x(genq:2)");
    sub->add_option("--table", o.table, "Cayley-table file instead of --spec");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--max-len", o.max_len, "longest odd hole/antihole to search for");
    sub->add_option("--budget", o.budget, "search node budget");
  };

  auto* generate = app.add_subcommand("generate", "write a group's Cayley table");
  add_group(generate);
  generate->add_option("--out", o.out, "output path (default stdout)");

  auto* graph = app.add_subcommand("graph", "write the power or enhanced power graph");
  add_group(graph);
  graph->add_option("--kind", o.kind, "enhanced | power");
  graph->add_option("--format", o.format, "edges | dot");
  graph->add_option("--out", o.out, "output path (default stdout)");

  auto* invariants = app.add_subcommand("invariants", "compute invariant reports");
  add_group(invariants);
  add_search(invariants);
  invariants->add_option("--source", o.source, "oracle | formula | both");
  invariants->add_option("--out", o.out, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "formula vs oracle sweep over a family");
  verify->add_option("--spec", o.spec, "family tag (abelian:P limits to P-groups)");
  verify->add_option("--range", o.range, "parameter range A:B (group orders for abelian)");
  verify->add_option("--checks", o.checks, "comma-separated invariant names");
  add_search(verify);
  verify->add_option("--out", o.out, "CSV report path");

  auto* perfect = app.add_subcommand("perfect", "search for odd holes and antiholes");
  add_group(perfect);
  add_search(perfect);
  perfect->add_option("--edges", o.edges, "edge-list file instead of a group");
  perfect->add_option("--out", o.out, "output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(o, out);
    if (graph->parsed()) return cmd_graph(o, out);
    if (invariants->parsed()) return cmd_invariants(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (perfect->parsed()) return cmd_perfect(o, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == ErrorKind::kBudgetExceeded ? kInconclusive : kUsage;
  }
  return kUsage;
}

}  // namespace epg::cli
