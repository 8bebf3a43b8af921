#include "msgeo/random_gen.hpp"

#include <cmath>

namespace msgeo {

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

double rand_unit(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

FiniteMetricSpace random_int_space(std::mt19937_64& rng, int n) {
  if (n < 1) fail("InvalidParams", "need n >= 1");
  FiniteMetricSpace x;
  x.n = n;
  x.labels = default_labels(n);
  x.dist.assign(static_cast<size_t>(n) * n, 0.0);
  for (;;) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) x.at(i, j) = x.at(j, i) = rand_int(rng, 1, 9);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k)
          if (x.d(i, k) > x.d(i, j) + x.d(j, k)) ok = false;
    if (ok) return x;
  }
}

FiniteMetricSpace random_cloud_space(std::mt19937_64& rng, int n, int dim,
                                     const std::string& metric) {
  std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
  for (auto& p : pts)
    for (double& c : p) c = rand_unit(rng);
  return space_from_points(pts, metric, default_tolerance());
}

SimpleGraph random_graph(std::mt19937_64& rng, int n, double edge_prob) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rand_unit(rng) < edge_prob) edges.emplace_back(u, v);
  return make_graph(n, std::move(edges));
}

BipartiteGraph random_bipartite_with_cover(std::mt19937_64& rng, int p, int q,
                                           double edge_prob) {
  std::vector<std::pair<int, int>> edges;
  std::vector<char> lc(p, 0), rc(q, 0);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      if (rand_unit(rng) < edge_prob) {
        edges.emplace_back(i, j);
        lc[i] = rc[j] = 1;
      }
  for (int i = 0; i < p; ++i)
    if (!lc[i]) {
      int j = rand_int(rng, 0, q - 1);
      edges.emplace_back(i, j);
      rc[j] = 1;
    }
  for (int j = 0; j < q; ++j)
    if (!rc[j]) edges.emplace_back(rand_int(rng, 0, p - 1), j);
  return make_bipartite(p, q, std::move(edges));
}

}  // namespace msgeo
