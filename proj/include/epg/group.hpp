#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "epg/bitset.hpp"

namespace epg {

using Element = std::uint32_t;

enum class Family {
  kCyclic,
  kAbelian,
  kDihedral,
  kSemidihedral,
  kU6n,
  kGenQuaternion,
  kProduct,
  kTable,  // loaded from a Cayley-table file; no family structure known
};

const char* to_string(Family family);

// n = 3^k * t with 3 not dividing t.
struct U6nShape {
  std::uint64_t n = 1;
  unsigned k = 0;
  std::uint64_t t = 1;

  static U6nShape from_n(std::uint64_t n);
};

// Records how a group was built. Family formulas key off this.
struct FamilyTag {
  Family family = Family::kTable;
  std::vector<std::uint64_t> params;
  std::optional<U6nShape> u6n;
};

// Order cap applied by every constructor. Defaults to 4096 and can be
// overridden by the EPG_SIZE_CAP environment variable or set_size_cap().
std::size_t size_cap();
void set_size_cap(std::size_t cap);

// A finite group given by its Cayley table over dense element indices.
// Index 0 is always the identity. Immutable after construction.
class FiniteGroup {
 public:
  // Validates the Latin-square, identity and associativity invariants.
  // Associativity is checked on all triples for order <= 64 and on
  // 10*order^2 sampled triples above that.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table,
                                std::string label, std::vector<std::string> names = {},
                                FamilyTag tag = {});

  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element x, Element y) const noexcept { return table_[std::size_t{x} * order_ + y]; }
  Element inverse(Element x) const noexcept { return inverses_[x]; }
  Element power(Element x, std::uint64_t k) const noexcept;
  std::size_t element_order(Element x) const noexcept { return orders_[x]; }

  std::span<const Element> table() const noexcept { return table_; }
  std::span<const Element> inverses() const noexcept { return inverses_; }
  std::span<const std::size_t> element_orders() const noexcept { return orders_; }

  const std::string& label() const noexcept { return label_; }
  const std::string& element_name(Element x) const { return names_[x]; }
  const std::vector<std::string>& element_names() const noexcept { return names_; }

  const FamilyTag& family_tag() const noexcept { return tag_; }
  Family family() const noexcept { return tag_.family; }

  bool is_abelian() const noexcept;

  // Members of <x>, as a membership set over the elements.
  Bitset cyclic_closure(Element x) const;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::size_t> orders_;
  std::string label_;
  std::vector<std::string> names_;
  FamilyTag tag_;
};

struct CyclicSubgroup {
  Element generator = 0;
  Bitset members;
  std::size_t order = 0;
  bool maximal = false;
};

// One entry per distinct cyclic subgroup, ordered by the smallest index of
// a generator.
struct CyclicSubgroupSet {
  std::vector<CyclicSubgroup> entries;

  std::size_t maximal_count() const;
  std::vector<const CyclicSubgroup*> maximal() const&;
  // Pointers would dangle once a temporary set is destroyed.
  std::vector<const CyclicSubgroup*> maximal() const&& = delete;
};

CyclicSubgroupSet cyclic_subgroups(const FiniteGroup& g);

std::size_t involution_count(const FiniteGroup& g);
std::uint64_t exponent(const FiniteGroup& g);

// True iff every element order is 1 or a prime power.
bool all_cyclic_subgroups_prime_power(const FiniteGroup& g);

// True iff |G| is 1 or a prime power.
bool is_p_group(const FiniteGroup& g);

}  // namespace epg
