#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace mockgauss {

// A set partition of {1..m} into r blocks as a restricted growth string:
// labels[0] = 1 and labels[j] <= 1 + max(labels[0..j-1]).
struct SetPartition {
  int m = 0;
  int r = 0;
  std::vector<int> labels;       // sigma(1..m), values in 1..r
  std::vector<int> block_sizes;  // lambda(1..r)

  bool operator==(const SetPartition&) const = default;
};

inline constexpr int kMaxEnumerationSize = 12;
inline constexpr int kMaxCountingSize = 20;

bool is_restricted_growth(const std::vector<int>& labels);

// All partitions of {1..m} into r nonempty blocks, in lexicographic order of
// the label string. Requires 1 <= r <= m <= 12.
std::vector<SetPartition> enumerate_partitions(int m, int r);

// Streams the same sequence without materialising it.
void for_each_partition(int m, int r, const std::function<void(const SetPartition&)>& visit);

// Stirling numbers of the second kind and Bell numbers for m <= 20.
std::uint64_t stirling2(int m, int r);
std::uint64_t bell(int m);

}  // namespace mockgauss
