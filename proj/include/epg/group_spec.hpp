#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "epg/group.hpp"

namespace epg {

// Parsed group description. Grammar:
//   cyclic:n | abelian:p1^a1,p2^a2,... | dihedral:n | semidihedral:n
//   u6n:n | genq:m | product:(spec)x(spec)
// Abelian parts may also be written as a bare prime power ("abelian:4,2").
struct GroupSpec {
  Family family = Family::kCyclic;
  std::vector<std::uint64_t> params;  // abelian: the prime-power part orders
  std::vector<GroupSpec> factors;     // product only

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Throws ParseError carrying the offending position.
GroupSpec parse_group_spec(std::string_view text);

// Canonical text form; parse_group_spec(to_string(s)) == s.
std::string to_string(const GroupSpec& spec);

FiniteGroup build_group(const GroupSpec& spec);

// Family tag as used on the command line ("dihedral", "u6n", ...).
Family parse_family(std::string_view name);

// Cayley-table text format: "order n" then n rows of n indices.
void write_cayley_table(std::ostream& out, const FiniteGroup& g);
FiniteGroup read_cayley_table(std::istream& in, std::string label = "table");

}  // namespace epg
