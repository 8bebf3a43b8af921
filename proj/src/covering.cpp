#include "msgeo/covering.hpp"

#include <bit>
#include <cstdint>

namespace msgeo {

// Open-ball membership with the tolerance shrink; the center itself always
// belongs (d = 0) so tiny eps never produces empty balls.
static bool inside_open(double d, double r, double tol) {
  if (d == 0.0) return r > 0.0;
  return d < r - tol;
}

static void check_args(const FiniteMetricSpace& x, const std::vector<int>& subset,
                       double eps) {
  if (subset.empty()) fail("EmptySet", "cov/pack need a non-empty subset");
  if (!(eps > 0.0)) fail("InvalidParams", "cov/pack need eps > 0");
  if (static_cast<int>(subset.size()) > kCovPackGuard)
    fail("TooLarge", "cov/pack guarded at subset size <= " + std::to_string(kCovPackGuard));
  for (int i : subset)
    if (i < 0 || i >= x.n) fail("IndexOutOfRange", "subset index " + std::to_string(i));
}

int cov(const FiniteMetricSpace& x, const std::vector<int>& subset, double eps,
        double tol) {
  check_args(x, subset, eps);
  const int k = static_cast<int>(subset.size());
  std::vector<uint32_t> ball(k, 0);
  for (int c = 0; c < k; ++c)
    for (int p = 0; p < k; ++p)
      if (inside_open(x.d(subset[c], subset[p]), eps, tol)) ball[c] |= 1u << p;

  const uint32_t full = k == 32 ? ~0u : (1u << k) - 1;
  std::vector<uint8_t> dp(static_cast<size_t>(full) + 1, 255);
  dp[0] = 0;
  for (uint32_t uncovered = 1; uncovered <= full; ++uncovered) {
    int i = std::countr_zero(uncovered);
    uint8_t best = 255;
    for (int c = 0; c < k; ++c) {
      if (!(ball[c] >> i & 1u)) continue;
      uint8_t v = dp[uncovered & ~ball[c]];
      if (v != 255 && v + 1 < best) best = static_cast<uint8_t>(v + 1);
    }
    dp[uncovered] = best;
  }
  return dp[full];
}

int pack(const FiniteMetricSpace& x, const std::vector<int>& subset, double eps,
         double tol) {
  check_args(x, subset, eps);
  const int k = static_cast<int>(subset.size());
  const double r = eps / 2.0;
  // Conflict graph: centers whose open r-balls share a subset point.
  std::vector<uint32_t> adj(k, 0);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) {
      bool meet = false;
      for (int z = 0; z < k && !meet; ++z)
        meet = inside_open(x.d(subset[u], subset[z]), r, tol) &&
               inside_open(x.d(subset[v], subset[z]), r, tol);
      if (meet) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
      }
    }
  const uint32_t full = k == 32 ? ~0u : (1u << k) - 1;
  int best = 0;
  for (uint32_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) <= best) continue;
    bool indep = true;
    for (uint32_t m = mask; m && indep; m &= m - 1)
      indep = (adj[std::countr_zero(m)] & mask) == 0;
    if (indep) best = std::popcount(mask);
  }
  return best;
}

}  // namespace msgeo
