#include "msgeo/correspondence.hpp"

#include <algorithm>
#include <cmath>

#include "msgeo/partitions.hpp"

namespace msgeo {

void validate_correspondence(const Correspondence& r) {
  if (r.left_size < 1 || r.right_size < 1)
    fail("InvalidCorrespondence", "correspondence needs non-empty sides");
  std::vector<char> left(r.left_size, 0), right(r.right_size, 0);
  for (auto [i, j] : r.pairs) {
    if (i < 0 || i >= r.left_size || j < 0 || j >= r.right_size)
      fail("InvalidCorrespondence",
           "pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    left[i] = right[j] = 1;
  }
  for (int i = 0; i < r.left_size; ++i)
    if (!left[i])
      fail("InvalidCorrespondence", "left index " + std::to_string(i) + " unmatched");
  for (int j = 0; j < r.right_size; ++j)
    if (!right[j])
      fail("InvalidCorrespondence", "right index " + std::to_string(j) + " unmatched");
}

double distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  const Correspondence& r) {
  if (r.left_size != x.n || r.right_size != y.n)
    fail("InvalidCorrespondence", "correspondence sizes do not match the spaces");
  validate_correspondence(r);
  double dis = 0.0;
  for (size_t u = 0; u < r.pairs.size(); ++u)
    for (size_t v = u + 1; v < r.pairs.size(); ++v) {
      auto [i, j] = r.pairs[u];
      auto [i2, j2] = r.pairs[v];
      dis = std::max(dis, std::fabs(x.d(i, i2) - y.d(j, j2)));
    }
  return dis;
}

namespace detail {

// Tries every bijection between the k blocks of P (sizes px) and Q (sizes qy)
// in lexicographic order, restricted to assignments where each matched pair
// has a singleton side.
static void perm_recurse(int depth, int k, const std::vector<int>& px,
                         const std::vector<int>& qy, std::vector<int>& perm,
                         std::vector<char>& used,
                         const std::function<void(const std::vector<int>&)>& fn) {
  if (depth == k) {
    fn(perm);
    return;
  }
  for (int j = 0; j < k; ++j) {
    if (used[j]) continue;
    if (px[depth] > 1 && qy[j] > 1) continue;
    used[j] = 1;
    perm[depth] = j;
    perm_recurse(depth + 1, k, px, qy, perm, used, fn);
    used[j] = 0;
  }
}

}  // namespace detail

void for_each_irreducible(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                          const std::function<void(const Correspondence&)>& fn) {
  const int n = x.n, m = y.n;
  if (std::max(n, m) > kGhGuard)
    fail("TooLarge", "irreducible enumeration guarded at max(n,m) <= " +
                         std::to_string(kGhGuard));
  for (int k = 1; k <= std::min(n, m); ++k) {
    // Materialize the k-block partitions of both sides once per k.
    std::vector<std::vector<int>> ps, qs;
    for_each_partition_rgs(n, k, [&](const std::vector<int>& rgs) { ps.push_back(rgs); });
    for_each_partition_rgs(m, k, [&](const std::vector<int>& rgs) { qs.push_back(rgs); });
    std::vector<int> px(k), qy(k);
    for (const auto& p : ps) {
      std::fill(px.begin(), px.end(), 0);
      for (int v : p) ++px[v];
      for (const auto& q : qs) {
        std::fill(qy.begin(), qy.end(), 0);
        for (int v : q) ++qy[v];
        std::vector<int> perm(k);
        std::vector<char> used(k, 0);
        detail::perm_recurse(0, k, px, qy, perm, used, [&](const std::vector<int>& pi) {
          Correspondence r;
          r.left_size = n;
          r.right_size = m;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
              if (pi[p[i]] == q[j]) r.pairs.emplace_back(i, j);
          fn(r);
        });
      }
    }
  }
}

std::vector<Correspondence> enumerate_irreducible(const FiniteMetricSpace& x,
                                                  const FiniteMetricSpace& y) {
  std::vector<Correspondence> out;
  for_each_irreducible(x, y, [&](const Correspondence& r) { out.push_back(r); });
  return out;
}

std::vector<int> extract_map(const Correspondence& r) {
  validate_correspondence(r);
  std::vector<int> f(r.left_size, -1);
  for (auto [i, j] : r.pairs)
    if (f[i] == -1 || j < f[i]) f[i] = j;
  return f;
}

}  // namespace msgeo
