#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace epg {

bool is_prime(std::uint64_t n);

// (p, k) with n = p^k and k >= 1, or nullopt when n is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

// Prime factorisation as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

// Largest k with p^k | n (n > 0, p > 1).
unsigned valuation(std::uint64_t n, std::uint64_t p);

}  // namespace epg
