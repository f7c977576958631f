#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mockgauss/dirichlet.hpp"

namespace mockgauss {

struct ZeroList {
  std::uint64_t q = 0;
  std::uint64_t char_index = 0;
  int parity = 0;
  double height = 0.0;
  double grid_step = 0.0;
  std::vector<double> ordinates;  // sorted, 0 < gamma < height
  std::vector<double> scaled;     // (log q / 2 pi) gamma
  std::vector<double> residuals;  // |L(1/2 + i gamma, chi)|
  double expected_count = 0.0;    // (theta(T) - theta(0)) / pi

  std::size_t size() const { return ordinates.size(); }
};

struct ZeroSearchOptions {
  double grid_step = 0.0;  // 0 selects min(0.05, 2 pi / log(q T))
  double bracket_tol = 1e-9;
  double residual_tol = 1e-7;
  double audit_threshold = 3.0;
  int max_refinements = 2;
};

inline constexpr double kMaxSearchHeight = 200.0;

double default_grid_step(std::uint64_t q, double T);

// Smooth zero count (theta(T) - theta(0)) / pi for 0 < gamma < T.
double expected_zero_count(std::uint64_t q, int parity, double T);

// (T / 2 pi) log(q T / (2 pi e)).
double zero_count_asymptotic(std::uint64_t q, double T);

inline double scale_ordinate(std::uint64_t q, double gamma) {
  return std::log(static_cast<double>(q)) / (2.0 * 3.141592653589793238462643383279502884) * gamma;
}

// Zeros of L(s, chi) on the critical line with 0 < gamma < T, by sign changes
// of the Hardy function plus a check of same-sign local minima, refined with
// TOMS 748 and audited against the smooth count.
ZeroList find_zeros(const DirichletCharacter& chi, double T, const ZeroSearchOptions& opts = {});

// Zeros with -T < gamma < 0, reported as positive magnitudes.
ZeroList find_negative_zeros(const DirichletCharacter& chi, double T,
                             const ZeroSearchOptions& opts = {});

class ZeroCache {
 public:
  explicit ZeroCache(std::filesystem::path dir);
  // MOCKGAUSS_CACHE_DIR, else $XDG_CACHE_HOME/mockgauss, else ~/.cache/mockgauss.
  static ZeroCache from_environment();

  std::optional<ZeroList> load(std::uint64_t q, std::uint64_t k, double T,
                               const ZeroSearchOptions& opts) const;
  void store(const ZeroList& zeros, const ZeroSearchOptions& opts) const;
  std::filesystem::path path_for(std::uint64_t q, std::uint64_t k, double T,
                                 const ZeroSearchOptions& opts) const;
  const std::filesystem::path& directory() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

// Zero lists for every nontrivial character mod q, indexed by k - 1. The grid
// scan shares Hurwitz values across characters. Results do not depend on the
// worker count; 0 means available parallelism.
std::vector<ZeroList> find_zeros_family(const DirichletGroup& group, double T,
                                        const ZeroSearchOptions& opts = {},
                                        const ZeroCache* cache = nullptr, int workers = 1);

}  // namespace mockgauss
