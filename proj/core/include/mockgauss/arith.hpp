#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace mockgauss {

inline constexpr std::uint64_t kSieveLimit = 100'000'000;

bool is_prime(std::uint64_t n);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);
// Smallest primitive root of the prime p.
std::uint64_t primitive_root(std::uint64_t p);

// Calls visit(n, log p) for every prime power n = p^k <= limit. Primes arrive
// in increasing order, each followed by its higher powers. Uses a segmented
// sieve; limit must not exceed kSieveLimit.
void for_each_prime_power(std::uint64_t limit,
                          const std::function<void(std::uint64_t, double)>& visit);

// von Mangoldt function by trial division (for checks, not bulk use).
double von_mangoldt(std::uint64_t n);

}  // namespace mockgauss
