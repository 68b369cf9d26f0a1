#include "epg/group.hpp"

#include <cstdlib>
#include <numeric>
#include <random>

#include "epg/error.hpp"
#include "epg/numeric.hpp"

namespace epg {

namespace {

std::size_t initial_size_cap() {
  if (const char* env = std::getenv("EPG_SIZE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

std::size_t& size_cap_storage() {
  static std::size_t cap = initial_size_cap();
  return cap;
}

void check_latin_square(std::size_t n, const std::vector<Element>& t) {
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t r = 0; r < n; ++r) {
    ++stamp;
    for (std::size_t c = 0; c < n; ++c) {
      Element v = t[r * n + c];
      if (v >= n) fail(ErrorKind::kInvalidParameter, "table entry out of range");
      if (seen[v] == stamp)
        fail(ErrorKind::kInvalidParameter, "row " + std::to_string(r) + " is not a permutation");
      seen[v] = stamp;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    ++stamp;
    for (std::size_t r = 0; r < n; ++r) {
      Element v = t[r * n + c];
      if (seen[v] == stamp)
        fail(ErrorKind::kInvalidParameter, "column " + std::to_string(c) + " is not a permutation");
      seen[v] = stamp;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (t[x] != x || t[x * n] != x)
      fail(ErrorKind::kInvalidParameter, "element 0 is not a two-sided identity");
  }
}

void check_associative(std::size_t n, const std::vector<Element>& t) {
  auto mul = [&](std::size_t a, std::size_t b) { return std::size_t{t[a * n + b]}; };
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t ab = mul(a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c)))
            fail(ErrorKind::kInvalidParameter, "table is not associative");
      }
    return;
  }
  std::mt19937_64 rng(0x5eed'ca11ULL ^ n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t samples = 10 * n * n;
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      fail(ErrorKind::kInvalidParameter, "table is not associative");
  }
}

}  // namespace

const char* to_string(Family family) {
  switch (family) {
    case Family::kCyclic: return "cyclic";
    case Family::kAbelian: return "abelian";
    case Family::kDihedral: return "dihedral";
    case Family::kSemidihedral: return "semidihedral";
    case Family::kU6n: return "u6n";
    case Family::kGenQuaternion: return "genq";
    case Family::kProduct: return "product";
    case Family::kTable: return "table";
  }
  return "unknown";
}

U6nShape U6nShape::from_n(std::uint64_t n) {
  if (n < 1) fail(ErrorKind::kInvalidParameter, "u6n requires n >= 1");
  U6nShape s;
  s.n = n;
  s.k = valuation(n, 3);
  s.t = n / ipow(3, s.k);
  return s;
}

std::size_t size_cap() { return size_cap_storage(); }
void set_size_cap(std::size_t cap) { size_cap_storage() = cap; }

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Element> table,
                                    std::string label, std::vector<std::string> names,
                                    FamilyTag tag) {
  if (order == 0) fail(ErrorKind::kInvalidParameter, "group order must be positive");
  if (order > size_cap())
    fail(ErrorKind::kSizeLimit, "group order " + std::to_string(order) + " exceeds size cap " +
                                    std::to_string(size_cap()));
  if (table.size() != order * order)
    fail(ErrorKind::kInvalidParameter, "table size does not match order");
  check_latin_square(order, table);
  check_associative(order, table);

  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.label_ = std::move(label);
  g.tag_ = std::move(tag);

  g.inverses_.resize(order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y)
      if (g.table_[x * order + y] == 0) {
        g.inverses_[x] = static_cast<Element>(y);
        break;
      }

  g.orders_.assign(order, 0);
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t k = 1;
    Element acc = static_cast<Element>(x);
    while (acc != 0) {
      acc = g.mul(acc, static_cast<Element>(x));
      ++k;
    }
    g.orders_[x] = k;
  }

  if (names.size() == order) {
    g.names_ = std::move(names);
  } else {
    g.names_.resize(order);
    for (std::size_t x = 0; x < order; ++x) g.names_[x] = x == 0 ? "e" : "g" + std::to_string(x);
  }
  return g;
}

Element FiniteGroup::power(Element x, std::uint64_t k) const noexcept {
  k %= orders_[x];
  Element result = 0;
  Element base = x;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = x + 1; y < order_; ++y)
      if (table_[x * order_ + y] != table_[y * order_ + x]) return false;
  return true;
}

Bitset FiniteGroup::cyclic_closure(Element x) const {
  Bitset members(order_);
  Element acc = 0;
  do {
    members.set(acc);
    acc = mul(acc, x);
  } while (acc != 0);
  return members;
}

std::size_t CyclicSubgroupSet::maximal_count() const {
  std::size_t c = 0;
  for (const auto& e : entries) c += e.maximal ? 1 : 0;
  return c;
}

std::vector<const CyclicSubgroup*> CyclicSubgroupSet::maximal() const& {
  std::vector<const CyclicSubgroup*> out;
  for (const auto& e : entries)
    if (e.maximal) out.push_back(&e);
  return out;
}

CyclicSubgroupSet cyclic_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(n, kUnassigned);
  CyclicSubgroupSet set;

  // <x> = <y> iff y in <x> and o(y) = o(x), so each subgroup is generated
  // once and all of its generators are claimed at the same time.
  for (std::size_t x = 0; x < n; ++x) {
    if (owner[x] != kUnassigned) continue;
    CyclicSubgroup entry;
    entry.generator = static_cast<Element>(x);
    entry.members = g.cyclic_closure(entry.generator);
    entry.order = g.element_order(entry.generator);
    const std::size_t id = set.entries.size();
    entry.members.for_each([&](std::size_t y) {
      if (g.element_order(static_cast<Element>(y)) == entry.order) owner[y] = id;
    });
    set.entries.push_back(std::move(entry));
  }

  // E is properly contained in F iff |F| > |E| and F contains a generator of E.
  for (auto& e : set.entries) {
    e.maximal = true;
    for (const auto& f : set.entries) {
      if (f.order > e.order && f.members.test(e.generator)) {
        e.maximal = false;
        break;
      }
    }
  }
  return set;
}

std::size_t involution_count(const FiniteGroup& g) {
  std::size_t t = 0;
  for (std::size_t o : g.element_orders()) t += o == 2 ? 1 : 0;
  return t;
}

std::uint64_t exponent(const FiniteGroup& g) {
  std::uint64_t e = 1;
  for (std::size_t o : g.element_orders()) e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

bool all_cyclic_subgroups_prime_power(const FiniteGroup& g) {
  for (std::size_t o : g.element_orders())
    if (o != 1 && !prime_power(o)) return false;
  return true;
}

bool is_p_group(const FiniteGroup& g) {
  return g.order() == 1 || prime_power(g.order()).has_value();
}

}  // namespace epg
