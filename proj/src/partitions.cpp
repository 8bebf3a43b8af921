#include "msgeo/partitions.hpp"

#include <limits>

namespace msgeo {

static bool rgs_recurse(std::vector<int>& rgs, int pos, int used, int n, int m,
                        const std::function<bool(const std::vector<int>&)>& fn) {
  if (pos == n) return used == m && fn(rgs);
  // Each unseen position may join an existing block or open the next one;
  // prune branches that can no longer reach exactly m blocks.
  int upper = std::min(used, m - 1);  // open a new block only while < m
  for (int b = 0; b <= upper; ++b) {
    int next_used = b == used ? used + 1 : used;
    if (next_used + (n - pos - 1) < m) continue;
    rgs[pos] = b;
    if (rgs_recurse(rgs, pos + 1, next_used, n, m, fn)) return true;
  }
  return false;
}

bool for_each_partition_rgs_until(int n, int m,
                                  const std::function<bool(const std::vector<int>&)>& fn) {
  if (n < 1) fail("InvalidParams", "partition enumeration needs n >= 1");
  if (m < 1 || m > n)
    fail("InvalidParams", "block count " + std::to_string(m) + " out of range 1.." +
                              std::to_string(n));
  if (n > kPartitionGuard)
    fail("TooLarge", "partition enumeration guarded at n <= " +
                         std::to_string(kPartitionGuard) + ", got " + std::to_string(n));
  std::vector<int> rgs(n, 0);
  return rgs_recurse(rgs, 0, 0, n, m, fn);
}

void for_each_partition_rgs(int n, int m,
                            const std::function<void(const std::vector<int>&)>& fn) {
  for_each_partition_rgs_until(n, m, [&](const std::vector<int>& rgs) {
    fn(rgs);
    return false;
  });
}

Partition partition_from_rgs(const std::vector<int>& rgs, int m) {
  Partition p;
  p.blocks.assign(m, {});
  for (int i = 0; i < static_cast<int>(rgs.size()); ++i) p.blocks[rgs[i]].push_back(i);
  return p;
}

std::vector<Partition> enumerate_partitions(const FiniteMetricSpace& x, int m) {
  std::vector<Partition> out;
  for_each_partition_rgs(x.n, m,
                         [&](const std::vector<int>& rgs) { out.push_back(partition_from_rgs(rgs, m)); });
  return out;
}

PartitionStats partition_stats(const FiniteMetricSpace& x, const Partition& p) {
  std::vector<int> rgs(x.n, -1);
  int m = static_cast<int>(p.blocks.size());
  int covered = 0;
  for (int b = 0; b < m; ++b) {
    if (p.blocks[b].empty()) fail("InvalidParams", "empty partition block");
    for (int i : p.blocks[b]) {
      if (i < 0 || i >= x.n || rgs[i] != -1)
        fail("InvalidParams", "partition is not a disjoint cover of the index range");
      rgs[i] = b;
      ++covered;
    }
  }
  if (covered != x.n) fail("InvalidParams", "partition does not cover all points");
  return partition_stats_rgs(x, rgs, m);
}

PartitionStats partition_stats_rgs(const FiniteMetricSpace& x,
                                   const std::vector<int>& rgs, int m) {
  PartitionStats st;
  st.diam = 0.0;
  if (m < 2) {  // inf over empty set -> +inf sentinel, sup -> 0
    st.alpha = std::numeric_limits<double>::infinity();
    st.beta = 0.0;
    for (int i = 0; i < x.n; ++i)
      for (int j = i + 1; j < x.n; ++j) st.diam = std::max(st.diam, x.d(i, j));
    return st;
  }
  st.alpha = std::numeric_limits<double>::infinity();
  st.beta = 0.0;
  for (int i = 0; i < x.n; ++i)
    for (int j = i + 1; j < x.n; ++j) {
      double v = x.d(i, j);
      if (rgs[i] == rgs[j]) {
        st.diam = std::max(st.diam, v);
      } else {
        st.alpha = std::min(st.alpha, v);
        st.beta = std::max(st.beta, v);
      }
    }
  return st;
}

}  // namespace msgeo
