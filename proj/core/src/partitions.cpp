#include "mockgauss/partitions.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "mockgauss/error.hpp"

namespace mockgauss {
namespace {

void check_enumeration_range(int m, int r) {
  if (m < 1 || m > kMaxEnumerationSize || r < 1 || r > m) {
    fail(ErrorKind::kOutOfRange, "partition enumeration needs 1 <= r <= m <= " +
                                     std::to_string(kMaxEnumerationSize) + ", got m=" +
                                     std::to_string(m) + " r=" + std::to_string(r));
  }
}

struct Walker {
  int m;
  int r;
  const std::function<void(const SetPartition&)>& visit;
  SetPartition current;

  // Position j is filled next; `used` labels appear so far.
  void extend(int j, int used) {
    if (j == m) {
      if (used == r) visit(current);
      return;
    }
    // Not enough positions left to open the remaining blocks.
    if (r - used > m - j) return;
    int top = std::min(used + 1, r);
    for (int label = 1; label <= top; ++label) {
      current.labels[static_cast<std::size_t>(j)] = label;
      ++current.block_sizes[static_cast<std::size_t>(label - 1)];
      extend(j + 1, std::max(used, label));
      --current.block_sizes[static_cast<std::size_t>(label - 1)];
    }
  }
};

}  // namespace

bool is_restricted_growth(const std::vector<int>& labels) {
  int running_max = 0;
  for (int v : labels) {
    if (v < 1 || v > running_max + 1) return false;
    running_max = std::max(running_max, v);
  }
  return !labels.empty();
}

void for_each_partition(int m, int r, const std::function<void(const SetPartition&)>& visit) {
  check_enumeration_range(m, r);
  Walker w{m, r, visit, {}};
  w.current.m = m;
  w.current.r = r;
  w.current.labels.assign(static_cast<std::size_t>(m), 0);
  w.current.block_sizes.assign(static_cast<std::size_t>(r), 0);
  w.extend(0, 0);
}

std::vector<SetPartition> enumerate_partitions(int m, int r) {
  std::vector<SetPartition> out;
  for_each_partition(m, r, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

std::uint64_t stirling2(int m, int r) {
  if (m < 0 || m > kMaxCountingSize) {
    fail(ErrorKind::kOverflow, "stirling2 limited to m <= " + std::to_string(kMaxCountingSize));
  }
  if (r < 0 || r > m) return 0;
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kMaxCountingSize + 1>, kMaxCountingSize + 1> t{};
    t[0][0] = 1;
    for (int n = 1; n <= kMaxCountingSize; ++n) {
      for (int k = 1; k <= n; ++k) {
        t[n][k] = static_cast<std::uint64_t>(k) * t[n - 1][k] + t[n - 1][k - 1];
      }
    }
    return t;
  }();
  return table[static_cast<std::size_t>(m)][static_cast<std::size_t>(r)];
}

std::uint64_t bell(int m) {
  if (m < 0 || m > kMaxCountingSize) {
    fail(ErrorKind::kOverflow, "bell limited to m <= " + std::to_string(kMaxCountingSize));
  }
  std::uint64_t total = 0;
  for (int r = 0; r <= m; ++r) total += stirling2(m, r);
  return total;
}

}  // namespace mockgauss
