#pragma once

#include <cstdint>
#include <span>

#include "epg/group.hpp"

namespace epg {

// Canonical element enumerations (stable across releases, golden files
// depend on them):
//   cyclic Z_n            a^i                      -> i
//   abelian Z_q1 x ...    (c_1, c_2, ...)          -> c_1 + q_1*c_2 + q_1*q_2*c_3 + ...
//   dihedral D_2n         a^i b^j, j in {0,1}      -> i + n*j
//   semidihedral SD_8n    a^i b^j, j in {0,1}      -> i + 4n*j
//   U_6n                  a^i b^j, j in {0,1,2}    -> i + 2n*j
//   gen. quaternion Q_4m  a^i b^j, j in {0,1}      -> i + 2m*j
//   direct product G x H  (x, y)                   -> x + |G|*y

FiniteGroup make_cyclic(std::uint64_t n);

// Direct product of cyclic groups of the given prime-power orders.
FiniteGroup make_abelian(std::span<const std::uint64_t> parts);

// <a, b : a^n = b^2 = e, ab = ba^-1>, n >= 2.
FiniteGroup make_dihedral(std::uint64_t n);

// <a, b : a^4n = b^2 = e, ba = a^(2n-1) b>, n >= 1. For n = 1 the relation
// degenerates to ba = ab and the result is Z_4 x Z_2.
FiniteGroup make_semidihedral(std::uint64_t n);

// <a, b : a^2n = b^3 = e, ba = ab^-1>, n >= 1.
FiniteGroup make_u6n(std::uint64_t n);

// <a, b : a^2m = e, b^2 = a^m, b^-1 a b = a^-1>, order 4m, m >= 2.
FiniteGroup make_generalized_quaternion(std::uint64_t m);

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace epg
