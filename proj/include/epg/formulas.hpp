#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "epg/group.hpp"
#include "epg/report.hpp"

namespace epg {

// Closed-form values for enhanced power graph invariants. Nothing here
// builds a graph; family formulas depend only on the family parameters and
// the general ones only on the cyclic-subgroup structure of the group.

// One block Z_{p^alpha}^{multiplicity} of an abelian p-group.
struct PGroupPart {
  unsigned alpha = 1;
  unsigned multiplicity = 1;

  friend bool operator==(const PGroupPart&, const PGroupPart&) = default;
};

// Z_{p^a1}^{m1} x ... x Z_{p^as}^{ms} with a1 > a2 > ... > as >= 1.
struct PGroupShape {
  std::uint64_t p = 2;
  std::vector<PGroupPart> parts;

  // Groups prime-power part orders of a single prime into a shape.
  static PGroupShape from_parts(std::span<const std::uint64_t> prime_power_parts);

  // Throws kInvalidParameter when p is not prime, alphas are not strictly
  // decreasing, or any alpha/multiplicity is zero.
  void validate() const;

  unsigned rank() const;  // r = m1 + ... + ms
  std::uint64_t order() const;
  std::uint64_t exponent() const;
  bool is_cyclic() const { return parts.size() == 1 && parts[0].multiplicity == 1; }

  // Part orders in non-increasing order, ready for make_abelian.
  std::vector<std::uint64_t> cyclic_parts() const;

  friend bool operator==(const PGroupShape&, const PGroupShape&) = default;
};

// Splits abelian part orders into one shape per prime (ascending primes).
std::vector<PGroupShape> sylow_shapes(std::span<const std::uint64_t> prime_power_parts);

// m - 1 where m is the order of a smallest maximal cyclic subgroup.
std::uint64_t mindeg_general(const FiniteGroup& g);

// Number of maximal cyclic subgroups.
std::uint64_t indep_maximal_count(const FiniteGroup& g);

// Independence number of the enhanced power graph of an abelian p-group:
//
//   sum_{t=1}^{r} n / p^(t-1) * ( p^((r_k - 1) a_k) / n_k + mu_k )
//
// with k chosen so that r_(k-1) < t <= r_k, n_j = p^(m1 a1 + ... + mj aj),
// r_j = m1 + ... + mj, and
//
//   mu_k = sum_{j=1}^{k-1} (p^(r_j) - 1) / n_j * sum_{b=a_(j+1)}^{a_j - 1} p^((r_j - 1) b)
//
// (mu_1 = 0). Evaluated in exact rational arithmetic; every per-t summand
// must be an integer or kInternalError is raised.
std::uint64_t indep_abelian_pgroup(const PGroupShape& shape);

// Product of indep_abelian_pgroup over Sylow shapes of distinct primes.
std::uint64_t indep_abelian(std::span<const PGroupShape> shapes);

struct MatchingBounds {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;

  bool exact() const { return lower == upper; }
  bool contains(std::uint64_t v) const { return lower <= v && v <= upper; }
};

// Odd order: exactly (|G|-1)/2. Even order: [(|G|-(t-1))/2, |G|/2] with t
// the number of involutions.
MatchingBounds matching_general(const FiniteGroup& g);

// Exact matching number for p-groups; kInvalidParameter otherwise.
std::uint64_t matching_pgroup(const FiniteGroup& g);

struct Covers {
  std::uint64_t vertex_cover = 0;  // beta = n - alpha
  std::uint64_t edge_cover = 0;    // beta' = n - alpha'
};

// Gallai identities. alpha_prime == 0 means the graph has isolated
// vertices and the edge cover is undefined (kInvalidParameter).
Covers covers_from(std::uint64_t alpha, std::uint64_t alpha_prime, std::uint64_t n);

// |G| - 1 for cyclic shapes, |G| - (a1 + 1) otherwise (p^a1 the exponent).
std::uint64_t sdim_abelian_pgroup(const PGroupShape& shape);

InvariantReport u6n_invariants(const U6nShape& shape);
InvariantReport d2n_invariants(std::uint64_t n);
InvariantReport sd8n_invariants(std::uint64_t n);

// Equals mindeg_general (diameter <= 2 forces edge connectivity = min degree).
std::uint64_t edge_connectivity_formula(const FiniteGroup& g);

// Formula report for a family-built group. Products and loaded tables
// raise kUnsupportedFamily. Matching is filled only where a formula gives
// an exact value; see matching_general for bounds.
InvariantReport formula_report(const FiniteGroup& g);

}  // namespace epg
