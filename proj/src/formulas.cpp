#include "epg/formulas.hpp"

#include <algorithm>
#include <map>
#include <boost/multiprecision/cpp_int.hpp>

#include "epg/error.hpp"
#include "epg/numeric.hpp"

namespace epg {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

std::uint64_t to_count(const BigInt& v, const char* what) {
  if (v < 0 || v > BigInt(UINT64_MAX))
    fail(ErrorKind::kInternalError, std::string(what) + ": value out of range");
  return v.convert_to<std::uint64_t>();
}

void fill_covers(InvariantReport& r) {
  const Covers c = covers_from(*r.independence_number, *r.matching_number, *r.vertex_count);
  r.vertex_cover_number = c.vertex_cover;
  r.edge_cover_number = c.edge_cover;
}

}  // namespace

PGroupShape PGroupShape::from_parts(std::span<const std::uint64_t> prime_power_parts) {
  if (prime_power_parts.empty()) fail(ErrorKind::kInvalidParameter, "empty p-group shape");
  PGroupShape shape;
  std::map<unsigned, unsigned, std::greater<>> by_alpha;
  for (std::uint64_t q : prime_power_parts) {
    auto pk = prime_power(q);
    if (!pk) fail(ErrorKind::kInvalidParameter, std::to_string(q) + " is not a prime power");
    if (by_alpha.empty()) shape.p = pk->first;
    if (pk->first != shape.p)
      fail(ErrorKind::kInvalidParameter, "p-group shape mixes primes");
    ++by_alpha[pk->second];
  }
  for (auto [alpha, m] : by_alpha) shape.parts.push_back({alpha, m});
  return shape;
}

void PGroupShape::validate() const {
  if (!is_prime(p)) fail(ErrorKind::kInvalidParameter, std::to_string(p) + " is not prime");
  if (parts.empty()) fail(ErrorKind::kInvalidParameter, "empty p-group shape");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].alpha < 1 || parts[i].multiplicity < 1)
      fail(ErrorKind::kInvalidParameter, "shape exponents and multiplicities must be >= 1");
    if (i > 0 && parts[i].alpha >= parts[i - 1].alpha)
      fail(ErrorKind::kInvalidParameter, "shape exponents must be strictly decreasing");
  }
}

unsigned PGroupShape::rank() const {
  unsigned r = 0;
  for (const auto& part : parts) r += part.multiplicity;
  return r;
}

std::uint64_t PGroupShape::order() const {
  std::uint64_t e = 0;
  for (const auto& part : parts) e += std::uint64_t{part.alpha} * part.multiplicity;
  return to_count(big_pow(p, e), "p-group order");
}

std::uint64_t PGroupShape::exponent() const { return ipow(p, parts.front().alpha); }

std::vector<std::uint64_t> PGroupShape::cyclic_parts() const {
  std::vector<std::uint64_t> out;
  for (const auto& part : parts)
    for (unsigned i = 0; i < part.multiplicity; ++i) out.push_back(ipow(p, part.alpha));
  return out;
}

std::vector<PGroupShape> sylow_shapes(std::span<const std::uint64_t> prime_power_parts) {
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_prime;
  for (std::uint64_t q : prime_power_parts) {
    auto pk = prime_power(q);
    if (!pk) fail(ErrorKind::kInvalidParameter, std::to_string(q) + " is not a prime power");
    by_prime[pk->first].push_back(q);
  }
  std::vector<PGroupShape> shapes;
  for (const auto& [p, qs] : by_prime) shapes.push_back(PGroupShape::from_parts(qs));
  return shapes;
}

std::uint64_t mindeg_general(const FiniteGroup& g) {
  std::size_t smallest = g.order();
  for (const auto& e : cyclic_subgroups(g).entries)
    if (e.maximal) smallest = std::min(smallest, e.order);
  return smallest - 1;
}

std::uint64_t indep_maximal_count(const FiniteGroup& g) {
  return cyclic_subgroups(g).maximal_count();
}

std::uint64_t indep_abelian_pgroup(const PGroupShape& shape) {
  shape.validate();
  const std::size_t s = shape.parts.size();
  const std::uint64_t p = shape.p;

  // Prefix sums with n_0 = 1, r_0 = 0; index j runs 0..s, alpha(j) is 1-based.
  std::vector<BigInt> n_j(s + 1);
  std::vector<std::uint64_t> r_j(s + 1, 0);
  std::uint64_t log_n = 0;
  n_j[0] = 1;
  for (std::size_t j = 1; j <= s; ++j) {
    log_n += std::uint64_t{shape.parts[j - 1].alpha} * shape.parts[j - 1].multiplicity;
    n_j[j] = big_pow(p, log_n);
    r_j[j] = r_j[j - 1] + shape.parts[j - 1].multiplicity;
  }
  auto alpha = [&](std::size_t j) { return std::uint64_t{shape.parts[j - 1].alpha}; };
  const BigInt& n = n_j[s];
  const std::uint64_t r = r_j[s];

  auto mu = [&](std::size_t k) {
    BigRational total = 0;
    for (std::size_t j = 1; j + 1 <= k; ++j) {
      BigInt inner = 0;
      for (std::uint64_t beta = alpha(j + 1); beta + 1 <= alpha(j); ++beta)
        inner += big_pow(p, (r_j[j] - 1) * beta);
      total += BigRational(big_pow(p, r_j[j]) - 1, n_j[j]) * BigRational(inner);
    }
    return total;
  };

  BigInt total = 0;
  std::size_t k = 1;
  for (std::uint64_t t = 1; t <= r; ++t) {
    while (t > r_j[k]) ++k;
    const BigRational brace =
        BigRational(big_pow(p, (r_j[k] - 1) * alpha(k)), n_j[k]) + mu(k);
    const BigRational summand = BigRational(n, big_pow(p, t - 1)) * brace;
    if (boost::multiprecision::denominator(summand) != 1)
      fail(ErrorKind::kInternalError,
           "independence formula produced a non-integral term at t=" + std::to_string(t));
    total += boost::multiprecision::numerator(summand);
  }
  return to_count(total, "independence formula");
}

std::uint64_t indep_abelian(std::span<const PGroupShape> shapes) {
  if (shapes.empty()) fail(ErrorKind::kInvalidParameter, "no Sylow shapes given");
  std::uint64_t product = 1;
  std::vector<std::uint64_t> primes;
  for (const auto& shape : shapes) {
    if (std::find(primes.begin(), primes.end(), shape.p) != primes.end())
      fail(ErrorKind::kInvalidParameter, "repeated prime " + std::to_string(shape.p));
    primes.push_back(shape.p);
    product *= indep_abelian_pgroup(shape);
  }
  return product;
}

MatchingBounds matching_general(const FiniteGroup& g) {
  const std::uint64_t n = g.order();
  if (n % 2 == 1) return {(n - 1) / 2, (n - 1) / 2};
  const std::uint64_t t = involution_count(g);
  return {(n - (t - 1)) / 2, n / 2};
}

std::uint64_t matching_pgroup(const FiniteGroup& g) {
  const std::uint64_t n = g.order();
  auto pk = prime_power(n);
  if (!pk) fail(ErrorKind::kInvalidParameter, "matching_pgroup needs a p-group");
  if (pk->first > 2) return (n - 1) / 2;
  return (n - (involution_count(g) - 1)) / 2;
}

Covers covers_from(std::uint64_t alpha, std::uint64_t alpha_prime, std::uint64_t n) {
  if (n < 1) fail(ErrorKind::kInvalidParameter, "covers need a non-empty graph");
  if (alpha > n) fail(ErrorKind::kInvalidParameter, "independence number exceeds vertex count");
  if (2 * alpha_prime > n) fail(ErrorKind::kInvalidParameter, "matching exceeds n/2");
  if (alpha_prime == 0)
    fail(ErrorKind::kInvalidParameter, "edge cover undefined for graphs with isolated vertices");
  return {n - alpha, n - alpha_prime};
}

std::uint64_t sdim_abelian_pgroup(const PGroupShape& shape) {
  shape.validate();
  const std::uint64_t n = shape.order();
  if (shape.is_cyclic()) return n - 1;
  return n - (shape.parts.front().alpha + 1);
}

InvariantReport u6n_invariants(const U6nShape& shape) {
  if (shape.n < 1) fail(ErrorKind::kInvalidParameter, "U_6n requires n >= 1");
  InvariantReport r;
  r.group = "U_" + std::to_string(6 * shape.n);
  r.source = ReportSource::kFormula;
  r.vertex_count = 6 * shape.n;
  r.min_degree = shape.k == 0 ? 2 * shape.t - 1 : 3 * shape.t - 1;
  r.independence_number = 2 * std::uint64_t{shape.k} + 4;
  r.matching_number = shape.n == 1 ? 2 : 3 * shape.n;
  r.strong_metric_dimension = 6 * shape.n - shape.k - 2;
  r.edge_connectivity = r.min_degree;
  fill_covers(r);
  return r;
}

InvariantReport d2n_invariants(std::uint64_t n) {
  if (n < 2) fail(ErrorKind::kInvalidParameter, "D_2n requires n >= 2");
  InvariantReport r;
  r.group = "D_" + std::to_string(2 * n);
  r.source = ReportSource::kFormula;
  r.vertex_count = 2 * n;
  r.min_degree = 1;
  r.independence_number = n + 1;
  r.matching_number = (n + 1) / 2;
  r.strong_metric_dimension = 2 * (n - 1);
  r.edge_connectivity = r.min_degree;
  fill_covers(r);
  return r;
}

InvariantReport sd8n_invariants(std::uint64_t n) {
  if (n < 1) fail(ErrorKind::kInvalidParameter, "SD_8n requires n >= 1");
  InvariantReport r;
  r.group = "SD_" + std::to_string(8 * n);
  r.source = ReportSource::kFormula;
  r.vertex_count = 8 * n;
  r.min_degree = 1;
  r.independence_number = 3 * n + 1;
  r.matching_number = 3 * n;
  r.strong_metric_dimension = 8 * n - 3;
  r.edge_connectivity = r.min_degree;
  fill_covers(r);
  return r;
}

std::uint64_t edge_connectivity_formula(const FiniteGroup& g) { return mindeg_general(g); }

InvariantReport formula_report(const FiniteGroup& g) {
  const FamilyTag& tag = g.family_tag();
  switch (tag.family) {
    case Family::kDihedral: return d2n_invariants(tag.params.at(0));
    case Family::kSemidihedral: return sd8n_invariants(tag.params.at(0));
    case Family::kU6n: return u6n_invariants(*tag.u6n);
    case Family::kCyclic:
    case Family::kAbelian:
    case Family::kGenQuaternion: break;
    case Family::kProduct:
    case Family::kTable:
      fail(ErrorKind::kUnsupportedFamily,
           std::string("no formulas for family '") + to_string(tag.family) + "'");
  }

  InvariantReport r;
  r.group = g.label();
  r.source = ReportSource::kFormula;
  r.vertex_count = g.order();
  r.min_degree = mindeg_general(g);
  r.edge_connectivity = edge_connectivity_formula(g);

  const MatchingBounds bounds = matching_general(g);
  if (is_p_group(g) && g.order() > 1) r.matching_number = matching_pgroup(g);
  else if (bounds.exact()) r.matching_number = bounds.lower;

  if (tag.family == Family::kGenQuaternion) {
    r.independence_number = indep_maximal_count(g);
  } else {
    std::vector<std::uint64_t> parts = tag.params;
    if (tag.family == Family::kCyclic) {
      parts.clear();
      for (auto [p, e] : factorize(tag.params.at(0))) parts.push_back(ipow(p, e));
    }
    if (parts.empty()) {  // trivial group
      r.independence_number = 1;
      r.strong_metric_dimension = 0;
    } else {
      const auto shapes = sylow_shapes(parts);
      r.independence_number = indep_abelian(shapes);
      if (shapes.size() == 1) r.strong_metric_dimension = sdim_abelian_pgroup(shapes.front());
      else if (tag.family == Family::kCyclic) r.strong_metric_dimension = g.order() - 1;
    }
  }

  r.vertex_cover_number = g.order() - *r.independence_number;
  if (r.matching_number && *r.matching_number > 0) r.edge_cover_number = g.order() - *r.matching_number;
  return r;
}

}  // namespace epg
