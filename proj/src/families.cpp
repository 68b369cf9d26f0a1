#include "epg/families.hpp"

#include <string>
#include <vector>

#include "epg/error.hpp"
#include "epg/numeric.hpp"

namespace epg {

namespace {

void check_cap(std::uint64_t order) {
  if (order > size_cap())
    fail(ErrorKind::kSizeLimit, "group order " + std::to_string(order) + " exceeds size cap " +
                                    std::to_string(size_cap()));
}

template <typename Mul>
std::vector<Element> build_table(std::size_t n, Mul&& mul) {
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = static_cast<Element>(mul(x, y));
  return table;
}

std::string power_name(const char* sym, std::uint64_t i) {
  if (i == 0) return "";
  if (i == 1) return sym;
  return std::string(sym) + "^" + std::to_string(i);
}

// Names for a^i b^j.
std::string ab_name(std::uint64_t i, std::uint64_t j) {
  std::string a = power_name("a", i);
  std::string b = power_name("b", j);
  if (a.empty() && b.empty()) return "e";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

std::uint64_t mod(std::int64_t x, std::uint64_t m) {
  std::int64_t r = x % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

}  // namespace

FiniteGroup make_cyclic(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::kInvalidParameter, "cyclic group requires n >= 1");
  check_cap(n);
  auto table = build_table(n, [n](std::size_t x, std::size_t y) { return (x + y) % n; });
  std::vector<std::string> names(n);
  for (std::uint64_t i = 0; i < n; ++i) names[i] = ab_name(i, 0);
  return FiniteGroup::from_table(n, std::move(table), "Z_" + std::to_string(n), std::move(names),
                                 {Family::kCyclic, {n}, {}});
}

FiniteGroup make_abelian(std::span<const std::uint64_t> parts) {
  if (parts.empty()) fail(ErrorKind::kInvalidParameter, "abelian group needs at least one part");
  std::uint64_t order = 1;
  std::string label;
  for (std::uint64_t q : parts) {
    if (!prime_power(q))
      fail(ErrorKind::kInvalidParameter, std::to_string(q) + " is not a prime power > 1");
    order *= q;
    check_cap(order);
    if (!label.empty()) label += "x";
    label += "Z_" + std::to_string(q);
  }
  const std::size_t n = order;
  const std::size_t r = parts.size();

  auto digits = [&](std::size_t x) {
    std::vector<std::uint64_t> d(r);
    for (std::size_t i = 0; i < r; ++i) {
      d[i] = x % parts[i];
      x /= parts[i];
    }
    return d;
  };
  auto table = build_table(n, [&](std::size_t x, std::size_t y) {
    std::size_t out = 0;
    std::size_t stride = 1;
    for (std::size_t i = 0; i < r; ++i) {
      std::uint64_t q = parts[i];
      out += ((x / stride) % q + (y / stride) % q) % q * stride;
      stride *= q;
    }
    return out;
  });
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (x == 0) {
      names[x] = "e";
      continue;
    }
    auto d = digits(x);
    std::string s = "(";
    for (std::size_t i = 0; i < r; ++i) s += (i ? "," : "") + std::to_string(d[i]);
    names[x] = s + ")";
  }
  return FiniteGroup::from_table(n, std::move(table), label, std::move(names),
                                 {Family::kAbelian, {parts.begin(), parts.end()}, {}});
}

FiniteGroup make_dihedral(std::uint64_t n) {
  if (n < 2) fail(ErrorKind::kInvalidParameter, "dihedral group requires n >= 2");
  check_cap(2 * n);
  const std::size_t order = 2 * n;
  // (a^i b^j)(a^k b^l) = a^(i + (-1)^j k) b^(j+l)
  auto table = build_table(order, [n](std::size_t x, std::size_t y) {
    std::int64_t i = x % n, j = x / n, k = y % n, l = y / n;
    std::uint64_t ai = mod(i + (j ? -k : k), n);
    return ai + n * ((j + l) % 2);
  });
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) names[x] = ab_name(x % n, x / n);
  return FiniteGroup::from_table(order, std::move(table), "D_" + std::to_string(order),
                                 std::move(names), {Family::kDihedral, {n}, {}});
}

FiniteGroup make_semidihedral(std::uint64_t n) {
  if (n < 1) fail(ErrorKind::kInvalidParameter, "semidihedral group requires n >= 1");
  check_cap(8 * n);
  const std::uint64_t m = 4 * n;
  const std::size_t order = 8 * n;
  // b a^k = a^(k (2n-1)) b, and (2n-1)^2 = 1 mod 4n.
  auto table = build_table(order, [n, m](std::size_t x, std::size_t y) {
    std::uint64_t i = x % m, j = x / m, k = y % m, l = y / m;
    std::uint64_t twist = j ? (k * (2 * n - 1)) % m : k;
    return (i + twist) % m + m * ((j + l) % 2);
  });
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) names[x] = ab_name(x % m, x / m);
  return FiniteGroup::from_table(order, std::move(table), "SD_" + std::to_string(order),
                                 std::move(names), {Family::kSemidihedral, {n}, {}});
}

FiniteGroup make_u6n(std::uint64_t n) {
  if (n < 1) fail(ErrorKind::kInvalidParameter, "U_6n requires n >= 1");
  check_cap(6 * n);
  const std::uint64_t m = 2 * n;
  const std::size_t order = 6 * n;
  // b^j a^k = a^k b^(j (-1)^k)
  auto table = build_table(order, [m](std::size_t x, std::size_t y) {
    std::uint64_t i = x % m, j = x / m, k = y % m, l = y / m;
    std::uint64_t bj = (k % 2 == 0) ? j : (3 - j) % 3;
    return (i + k) % m + m * ((bj + l) % 3);
  });
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) names[x] = ab_name(x % m, x / m);
  return FiniteGroup::from_table(order, std::move(table), "U_" + std::to_string(order),
                                 std::move(names), {Family::kU6n, {n}, U6nShape::from_n(n)});
}

FiniteGroup make_generalized_quaternion(std::uint64_t m) {
  if (m < 2) fail(ErrorKind::kInvalidParameter, "generalized quaternion group requires m >= 2");
  check_cap(4 * m);
  const std::uint64_t am = 2 * m;
  const std::size_t order = 4 * m;
  // b a^k = a^-k b and b^2 = a^m
  auto table = build_table(order, [m, am](std::size_t x, std::size_t y) {
    std::int64_t i = x % am, j = x / am, k = y % am, l = y / am;
    std::int64_t a = i + (j ? -k : k);
    if (j + l == 2) a += static_cast<std::int64_t>(m);
    return mod(a, am) + am * ((j + l) % 2);
  });
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) names[x] = ab_name(x % am, x / am);
  return FiniteGroup::from_table(order, std::move(table), "Q_" + std::to_string(order),
                                 std::move(names), {Family::kGenQuaternion, {m}, {}});
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::uint64_t order = std::uint64_t{g.order()} * h.order();
  check_cap(order);
  const std::size_t gn = g.order();
  auto table = build_table(order, [&](std::size_t x, std::size_t y) {
    auto gx = static_cast<Element>(x % gn), hx = static_cast<Element>(x / gn);
    auto gy = static_cast<Element>(y % gn), hy = static_cast<Element>(y / gn);
    return std::size_t{g.mul(gx, gy)} + gn * h.mul(hx, hy);
  });
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x)
    names[x] = x == 0 ? "e"
                      : "(" + g.element_name(static_cast<Element>(x % gn)) + "," +
                            h.element_name(static_cast<Element>(x / gn)) + ")";
  return FiniteGroup::from_table(order, std::move(table), g.label() + "x" + h.label(),
                                 std::move(names), {Family::kProduct, {}, {}});
}

}  // namespace epg
