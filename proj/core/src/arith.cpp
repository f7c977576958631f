#include "mockgauss/arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mockgauss/error.hpp"

namespace mockgauss {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::kNonprimeModulus, std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const std::vector<std::uint64_t> factors = distinct_prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(),
                          [&](std::uint64_t f) { return powmod(g, (p - 1) / f, p) != 1; });
    if (ok) return g;
  }
  fail(ErrorKind::kNonprimeModulus, "no primitive root found for " + std::to_string(p));
}

void for_each_prime_power(std::uint64_t limit,
                          const std::function<void(std::uint64_t, double)>& visit) {
  if (limit > kSieveLimit) {
    fail(ErrorKind::kSieveRangeOverflow,
         "prime-power range " + std::to_string(limit) + " exceeds " + std::to_string(kSieveLimit),
         static_cast<double>(limit), static_cast<double>(kSieveLimit));
  }
  if (limit < 2) return;
  const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<bool> small(root + 1, true);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = false;
  }
  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<char> mark(kSegment);
  for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
    const std::uint64_t hi = std::min(limit, lo + kSegment - 1);
    std::fill(mark.begin(), mark.end(), 1);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= hi; j += p) mark[j - lo] = 0;
    }
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (!mark[n - lo]) continue;
      const double lp = std::log(static_cast<double>(n));
      visit(n, lp);
      for (std::uint64_t pk = n; pk <= limit / n;) {
        pk *= n;
        visit(pk, lp);
      }
    }
  }
}

double von_mangoldt(std::uint64_t n) {
  if (n < 2) return 0.0;
  std::vector<std::uint64_t> f = distinct_prime_factors(n);
  return f.size() == 1 ? std::log(static_cast<double>(f[0])) : 0.0;
}

}  // namespace mockgauss
