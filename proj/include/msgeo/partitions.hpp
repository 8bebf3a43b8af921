#pragma once

#include <functional>
#include <vector>

#include "msgeo/metric_space.hpp"

namespace msgeo {

inline constexpr int kPartitionGuard = 12;

// Blocks are disjoint, non-empty, and union to {0..n-1}; ordered by smallest
// element (the order induced by the restricted growth string).
struct Partition {
  std::vector<std::vector<int>> blocks;
};

struct PartitionStats {
  double diam;   // max block diameter
  double alpha;  // min inter-block distance; +inf for a one-block partition
  double beta;   // max inter-block distance; 0 for a one-block partition
};

// Streams every partition of {0..n-1} into exactly m blocks, in lexicographic
// restricted-growth-string order. The callback receives the growth string
// (rgs[i] = block id of point i, ids numbered by first appearance).
void for_each_partition_rgs(int n, int m,
                            const std::function<void(const std::vector<int>&)>& fn);

// Same enumeration, but stops as soon as the callback returns true; the
// return value says whether any callback did.
bool for_each_partition_rgs_until(int n, int m,
                                  const std::function<bool(const std::vector<int>&)>& fn);

Partition partition_from_rgs(const std::vector<int>& rgs, int m);

// Materialized enumeration (count = Stirling number S(n, m)).
std::vector<Partition> enumerate_partitions(const FiniteMetricSpace& x, int m);

PartitionStats partition_stats(const FiniteMetricSpace& x, const Partition& p);

// Fast path used by the enumeration-heavy routes: stats straight from a
// growth string, no block materialization.
PartitionStats partition_stats_rgs(const FiniteMetricSpace& x,
                                   const std::vector<int>& rgs, int m);

}  // namespace msgeo
