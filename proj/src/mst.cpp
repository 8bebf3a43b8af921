#include "msgeo/mst.hpp"

#include <algorithm>
#include <numeric>

#include "msgeo/gromov_hausdorff.hpp"
#include "msgeo/partitions.hpp"

namespace msgeo {

double Tree::length() const {
  double s = 0.0;
  for (const auto& [i, j, l] : edges) s += l;
  return s;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

Tree mst(const FiniteMetricSpace& x) {
  Tree t;
  t.n = x.n;
  if (x.n < 2) return t;
  std::vector<std::tuple<double, int, int>> edges;
  edges.reserve(static_cast<size_t>(x.n) * (x.n - 1) / 2);
  for (int i = 0; i < x.n; ++i)
    for (int j = i + 1; j < x.n; ++j) edges.emplace_back(x.d(i, j), i, j);
  std::sort(edges.begin(), edges.end());
  Dsu dsu(x.n);
  for (const auto& [l, i, j] : edges) {
    if (dsu.unite(i, j)) {
      t.edges.emplace_back(i, j, l);
      if (static_cast<int>(t.edges.size()) == x.n - 1) break;
    }
  }
  return t;
}

double mst_length(const FiniteMetricSpace& x) { return mst(x).length(); }

std::vector<double> mst_spectrum(const FiniteMetricSpace& x) {
  if (x.n < 2) fail("SingletonSpace", "mst_spectrum needs at least 2 points");
  std::vector<double> out;
  for (const auto& [i, j, l] : mst(x).edges) out.push_back(l);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<double> mst_spectrum_by_partitions(const FiniteMetricSpace& x) {
  if (x.n < 2) fail("SingletonSpace", "mst_spectrum needs at least 2 points");
  std::vector<double> out;
  for (int k = 1; k <= x.n - 1; ++k) {
    double best = 0.0;
    for_each_partition_rgs(x.n, k + 1, [&](const std::vector<int>& rgs) {
      best = std::max(best, partition_stats_rgs(x, rgs, k + 1).alpha);
    });
    out.push_back(best);
  }
  return out;
}

SpectrumGH mst_spectrum_by_gh(const FiniteMetricSpace& x, double lambda, double tol) {
  if (x.n < 2) fail("SingletonSpace", "mst_spectrum needs at least 2 points");
  double dx = diameter(x);
  if (lambda + tol < 2.0 * dx)
    fail("LambdaTooSmall", "lambda = " + format_double(lambda) +
                               " below 2*diameter = " + format_double(2.0 * dx));
  SpectrumGH out;
  double sum = 0.0;
  for (int k = 1; k <= x.n - 1; ++k) {
    double d = gh_to_simplex(x, k + 1, lambda);
    sum += d;
    out.spectrum.push_back(lambda - 2.0 * d);
  }
  out.mst_length = lambda * (x.n - 1) - 2.0 * sum;
  return out;
}

}  // namespace msgeo
