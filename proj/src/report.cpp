#include "epg/report.hpp"

#include <sstream>

#include "epg/error.hpp"

namespace epg {

namespace {

std::string show(const std::optional<std::uint64_t>& v, const char* absent) {
  return v ? std::to_string(*v) : absent;
}

}  // namespace

const char* to_string(ReportSource source) {
  return source == ReportSource::kOracle ? "oracle" : "formula";
}

const char* to_string(PerfectVerdict verdict) {
  switch (verdict) {
    case PerfectVerdict::kPerfectUpToBound: return "perfect-up-to-bound";
    case PerfectVerdict::kOddHoleFound: return "odd-hole-found";
    case PerfectVerdict::kOddAntiholeFound: return "odd-antihole-found";
    case PerfectVerdict::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string InvariantReport::to_key_value() const {
  std::ostringstream out;
  out << "group=" << group << '\n';
  out << "source=" << to_string(source) << '\n';
  out << "vertices=" << show(vertex_count, "-") << '\n';
  for (const auto& [name, field] : kInvariantFields)
    out << name << '=' << show(this->*field, "-") << '\n';
  out << "perfect_verdict=" << (perfect_verdict ? to_string(*perfect_verdict) : "-") << '\n';
  if (!skipped.empty()) {
    out << "skipped=";
    for (std::size_t i = 0; i < skipped.size(); ++i) out << (i ? "," : "") << skipped[i];
    out << '\n';
  }
  return out.str();
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string InvariantReport::csv_header() {
  std::string h = "group,source,vertices";
  for (const auto& f : kInvariantFields) h += "," + std::string(f.name);
  return h + ",perfect_verdict";
}

std::string InvariantReport::to_csv_row() const {
  std::string row = csv_field(group) + "," + to_string(source) + "," + show(vertex_count, "");
  for (const auto& f : kInvariantFields) row += "," + show(this->*f.field, "");
  row += ",";
  if (perfect_verdict) row += to_string(*perfect_verdict);
  return row;
}

std::optional<ReportField> find_field(std::string_view name) {
  for (const auto& f : kInvariantFields)
    if (f.name == name) return f.field;
  return std::nullopt;
}

PerfectVerdict perfect_verdict(const SimpleGraph& g, std::size_t max_len,
                               std::uint64_t node_budget, std::vector<Vertex>* certificate) {
  auto hole = find_odd_hole(g, max_len, node_budget);
  if (hole.status == CycleSearchStatus::kFound) {
    if (certificate) *certificate = hole.cycle;
    return PerfectVerdict::kOddHoleFound;
  }
  auto antihole = find_odd_antihole(g, max_len, node_budget);
  if (antihole.status == CycleSearchStatus::kFound) {
    if (certificate) *certificate = antihole.cycle;
    return PerfectVerdict::kOddAntiholeFound;
  }
  if (hole.status == CycleSearchStatus::kBudgetExceeded ||
      antihole.status == CycleSearchStatus::kBudgetExceeded)
    return PerfectVerdict::kInconclusive;
  return PerfectVerdict::kPerfectUpToBound;
}

InvariantReport oracle_report(const SimpleGraph& g, std::string label,
                              const OracleOptions& options) {
  InvariantReport r;
  r.group = std::move(label);
  r.source = ReportSource::kOracle;
  const std::size_t n = g.vertex_count();
  r.vertex_count = n;

  // Runs one oracle; a budget overrun marks the invariant as skipped.
  auto attempt = [&](std::string_view name, auto&& compute) {
    try {
      return std::optional<std::uint64_t>(compute());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kBudgetExceeded && e.kind() != ErrorKind::kUnsupportedDiameter)
        throw;
      r.skipped.emplace_back(name);
      return std::optional<std::uint64_t>();
    }
  };

  r.min_degree = min_degree(g);
  r.independence_number =
      attempt("independence_number", [&] { return independence_number(g, options.node_budget); });
  r.matching_number = maximum_matching(g);
  if (r.independence_number) r.vertex_cover_number = n - *r.independence_number;
  if (*r.min_degree > 0) r.edge_cover_number = n - *r.matching_number;
  r.clique_number = attempt("clique_number", [&] { return max_clique(g, options.node_budget); });
  if (n >= 2) {
    r.edge_connectivity = attempt("edge_connectivity", [&]() -> std::size_t {
      if (n > options.edge_connectivity_max_vertices)
        fail(ErrorKind::kBudgetExceeded, "edge connectivity vertex bound");
      return edge_connectivity(g);
    });
  }
  r.strong_metric_dimension = attempt("strong_metric_dimension", [&] {
    return strong_metric_dimension(g, options.node_budget);
  });
  if (options.check_perfect && n > 0)
    r.perfect_verdict = perfect_verdict(g, options.hole_max_len, options.node_budget);
  return r;
}

}  // namespace epg
