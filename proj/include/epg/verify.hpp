#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "epg/group.hpp"
#include "epg/group_spec.hpp"
#include "epg/report.hpp"

namespace epg {

enum class Verdict { kMatch, kMismatch, kOracleSkipped };

const char* to_string(Verdict verdict);

struct VerificationRow {
  std::string group;
  std::string invariant;
  std::string formula;
  std::string oracle;
  Verdict verdict = Verdict::kMatch;

  friend bool operator==(const VerificationRow&, const VerificationRow&) = default;
};

// CSV schema: group,invariant,formula,oracle,verdict
std::string verification_csv_header();
std::string to_csv(const VerificationRow& row);

// Check names accepted by verify: every numeric invariant with a formula
// plus "perfect".
const std::vector<std::string>& all_check_names();

struct VerifyOptions {
  std::vector<std::string> checks;  // empty means all
  OracleOptions oracle;
};

struct SweepConfig {
  Family family = Family::kDihedral;
  // Abelian sweeps range over group orders and may be limited to one
  // prime; every other family ranges over its integer parameter.
  std::optional<std::uint64_t> prime;
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  VerifyOptions options;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Compares the formula report against the oracle report for one group.
std::vector<VerificationRow> verify_group(const FiniteGroup& g, const std::string& label,
                                          const VerifyOptions& options);

// Every group spec covered by the sweep, in canonical order. Ranges that
// violate a family precondition raise kInvalidParameter.
std::vector<GroupSpec> sweep_specs(const SweepConfig& cfg);

// All abelian groups (as sorted prime-power part lists) of the given order.
std::vector<std::vector<std::uint64_t>> abelian_groups_of_order(std::uint64_t order);

// Runs the sweep across groups in parallel and returns rows in spec order.
std::vector<VerificationRow> run_sweep(const SweepConfig& cfg);

// 0 = all match, 1 = any mismatch, 3 = no mismatch but something skipped.
int sweep_exit_status(const std::vector<VerificationRow>& rows);

}  // namespace epg
