#pragma once

#include <cstdint>
#include <random>

namespace mockgauss {

// Deterministic random stream identified by (seed, stream index). Uniform and
// normal variates are derived from raw 64-bit words by fixed formulas so that
// results are reproducible across standard libraries.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t tag() const noexcept { return tag_; }
  std::uint64_t next_u64() { return engine_(); }
  // Uniform on the open interval (0, 1) with 53-bit resolution.
  double uniform();
  // Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
  std::uint64_t tag_;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace mockgauss
