#include "epg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "epg/error.hpp"
#include "epg/formulas.hpp"
#include "epg/group_graphs.hpp"
#include "epg/numeric.hpp"

namespace epg {

namespace {

bool wants(const VerifyOptions& options, std::string_view name) {
  return options.checks.empty() ||
         std::find(options.checks.begin(), options.checks.end(), name) != options.checks.end();
}

bool family_proven_perfect(Family f) {
  return f == Family::kDihedral || f == Family::kSemidihedral || f == Family::kU6n;
}

// Partitions of e into non-increasing positive parts, in reverse
// lexicographic order.
void partitions(unsigned e, unsigned max_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(e, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(e - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kMatch: return "match";
    case Verdict::kMismatch: return "mismatch";
    case Verdict::kOracleSkipped: return "oracle-skipped";
  }
  return "unknown";
}

std::string verification_csv_header() { return "group,invariant,formula,oracle,verdict"; }

std::string to_csv(const VerificationRow& row) {
  return csv_field(row.group) + "," + row.invariant + "," + row.formula + "," + row.oracle + "," +
         to_string(row.verdict);
}

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& f : kInvariantFields)
      if (f.name != "clique_number") v.emplace_back(f.name);
    v.emplace_back("perfect");
    return v;
  }();
  return names;
}

std::vector<VerificationRow> verify_group(const FiniteGroup& g, const std::string& label,
                                          const VerifyOptions& options) {
  for (const auto& c : options.checks)
    if (std::find(all_check_names().begin(), all_check_names().end(), c) ==
        all_check_names().end())
      fail(ErrorKind::kInvalidParameter, "unknown check '" + c + "'");

  const InvariantReport formula = formula_report(g);
  const auto graph = enhanced_power_graph(g);
  OracleOptions oracle_opts = options.oracle;
  oracle_opts.check_perfect = wants(options, "perfect") && family_proven_perfect(g.family());
  const InvariantReport oracle = oracle_report(graph.graph, label, oracle_opts);

  std::vector<VerificationRow> rows;
  for (const auto& [name, field] : kInvariantFields) {
    if (name == "clique_number" || !wants(options, name)) continue;
    const auto& fv = formula.*field;
    const auto& ov = oracle.*field;
    VerificationRow row{label, std::string(name), fv ? std::to_string(*fv) : "",
                        ov ? std::to_string(*ov) : "", Verdict::kMatch};
    if (!fv) {
      if (name != "matching_number") continue;
      // Only bounds are known for this group.
      const MatchingBounds b = matching_general(g);
      row.formula = std::to_string(b.lower) + ".." + std::to_string(b.upper);
      row.verdict = !ov ? Verdict::kOracleSkipped
                        : (b.contains(*ov) ? Verdict::kMatch : Verdict::kMismatch);
    } else if (!ov) {
      row.verdict = Verdict::kOracleSkipped;
    } else {
      row.verdict = *fv == *ov ? Verdict::kMatch : Verdict::kMismatch;
    }
    rows.push_back(std::move(row));
  }
  if (oracle_opts.check_perfect) {
    VerificationRow row{label, "perfect", to_string(PerfectVerdict::kPerfectUpToBound),
                        to_string(*oracle.perfect_verdict), Verdict::kMatch};
    if (*oracle.perfect_verdict == PerfectVerdict::kInconclusive)
      row.verdict = Verdict::kOracleSkipped;
    else if (*oracle.perfect_verdict != PerfectVerdict::kPerfectUpToBound)
      row.verdict = Verdict::kMismatch;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<std::uint64_t>> abelian_groups_of_order(std::uint64_t order) {
  std::vector<std::vector<std::uint64_t>> groups{{}};
  for (auto [p, e] : factorize(order)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& base : groups)
      for (const auto& partition : parts) {
        auto g = base;
        for (unsigned a : partition) g.push_back(ipow(p, a));
        next.push_back(std::move(g));
      }
    groups = std::move(next);
  }
  return groups;
}

std::vector<GroupSpec> sweep_specs(const SweepConfig& cfg) {
  if (cfg.first > cfg.last) fail(ErrorKind::kInvalidParameter, "empty sweep range");
  std::vector<GroupSpec> specs;
  if (cfg.family == Family::kAbelian) {
    if (cfg.prime && !is_prime(*cfg.prime))
      fail(ErrorKind::kInvalidParameter, std::to_string(*cfg.prime) + " is not prime");
    for (std::uint64_t order = std::max<std::uint64_t>(cfg.first, 2); order <= cfg.last; ++order) {
      if (cfg.prime) {
        auto pk = prime_power(order);
        if (!pk || pk->first != *cfg.prime) continue;
      }
      if (order > size_cap())
        fail(ErrorKind::kSizeLimit, "sweep reaches order " + std::to_string(order));
      for (auto& parts : abelian_groups_of_order(order))
        specs.push_back(GroupSpec{Family::kAbelian, std::move(parts), {}});
    }
    return specs;
  }

  std::uint64_t min_param = 1, order_factor = 1;
  switch (cfg.family) {
    case Family::kCyclic: min_param = 1; order_factor = 1; break;
    case Family::kDihedral: min_param = 2; order_factor = 2; break;
    case Family::kSemidihedral: min_param = 1; order_factor = 8; break;
    case Family::kU6n: min_param = 1; order_factor = 6; break;
    case Family::kGenQuaternion: min_param = 2; order_factor = 4; break;
    default:
      fail(ErrorKind::kUnsupportedFamily,
           std::string("cannot sweep family '") + to_string(cfg.family) + "'");
  }
  if (cfg.first < min_param)
    fail(ErrorKind::kInvalidParameter, std::string(to_string(cfg.family)) +
                                           " sweep must start at >= " + std::to_string(min_param));
  if (cfg.last * order_factor > size_cap())
    fail(ErrorKind::kSizeLimit, "sweep exceeds the group order cap");
  for (std::uint64_t n = cfg.first; n <= cfg.last; ++n)
    specs.push_back(GroupSpec{cfg.family, {n}, {}});
  return specs;
}

std::vector<VerificationRow> run_sweep(const SweepConfig& cfg) {
  const auto specs = sweep_specs(cfg);
  std::vector<std::vector<VerificationRow>> results(specs.size());
  std::vector<std::exception_ptr> errors(specs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        const FiniteGroup g = build_group(specs[i]);
        results[i] = verify_group(g, to_string(specs[i]), cfg.options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(specs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<VerificationRow> rows;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    for (auto& r : results[i]) rows.push_back(std::move(r));
  }
  return rows;
}

int sweep_exit_status(const std::vector<VerificationRow>& rows) {
  bool skipped = false;
  for (const auto& r : rows) {
    if (r.verdict == Verdict::kMismatch) return 1;
    skipped = skipped || r.verdict == Verdict::kOracleSkipped;
  }
  return skipped ? 3 : 0;
}

}  // namespace epg
