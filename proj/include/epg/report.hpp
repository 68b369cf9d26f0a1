#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epg/graph.hpp"
#include "epg/invariants.hpp"

namespace epg {

enum class ReportSource { kOracle, kFormula };

enum class PerfectVerdict {
  kPerfectUpToBound,
  kOddHoleFound,
  kOddAntiholeFound,
  kInconclusive,  // search budget ran out
};

const char* to_string(ReportSource source);
const char* to_string(PerfectVerdict verdict);

// Named invariant values for one graph. Absent values were either not
// computed (formula has no statement) or skipped (oracle budget).
struct InvariantReport {
  std::string group;
  ReportSource source = ReportSource::kOracle;
  std::optional<std::uint64_t> vertex_count;
  std::optional<std::uint64_t> min_degree;
  std::optional<std::uint64_t> independence_number;
  std::optional<std::uint64_t> matching_number;
  std::optional<std::uint64_t> vertex_cover_number;
  std::optional<std::uint64_t> edge_cover_number;
  std::optional<std::uint64_t> clique_number;
  std::optional<std::uint64_t> edge_connectivity;
  std::optional<std::uint64_t> strong_metric_dimension;
  std::optional<PerfectVerdict> perfect_verdict;
  std::vector<std::string> skipped;

  // key=value lines, one per field; absent values print as "-".
  std::string to_key_value() const;

  // CSV columns, fixed:
  //   group,source,vertices,min_degree,independence_number,matching_number,
  //   vertex_cover_number,edge_cover_number,clique_number,edge_connectivity,
  //   strong_metric_dimension,perfect_verdict
  static std::string csv_header();
  std::string to_csv_row() const;
};

// Quotes a CSV field when it holds a comma, quote or newline.
std::string csv_field(std::string_view text);

using ReportField = std::optional<std::uint64_t> InvariantReport::*;

struct NamedField {
  std::string_view name;
  ReportField field;
};

// The numeric invariants in CSV column order (vertices excluded).
inline constexpr std::array<NamedField, 8> kInvariantFields{{
    {"min_degree", &InvariantReport::min_degree},
    {"independence_number", &InvariantReport::independence_number},
    {"matching_number", &InvariantReport::matching_number},
    {"vertex_cover_number", &InvariantReport::vertex_cover_number},
    {"edge_cover_number", &InvariantReport::edge_cover_number},
    {"clique_number", &InvariantReport::clique_number},
    {"edge_connectivity", &InvariantReport::edge_connectivity},
    {"strong_metric_dimension", &InvariantReport::strong_metric_dimension},
}};

std::optional<ReportField> find_field(std::string_view name);

struct OracleOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::size_t hole_max_len = kDefaultHoleMaxLen;
  bool check_perfect = true;
  // Stoer-Wagner is cubic; larger graphs are reported as skipped.
  std::size_t edge_connectivity_max_vertices = 1024;
};

// Runs every exact oracle on g.
InvariantReport oracle_report(const SimpleGraph& g, std::string label,
                              const OracleOptions& options = {});

// Hole then antihole search.
PerfectVerdict perfect_verdict(const SimpleGraph& g, std::size_t max_len,
                               std::uint64_t node_budget,
                               std::vector<Vertex>* certificate = nullptr);

}  // namespace epg
