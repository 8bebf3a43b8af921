#include "msgeo/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "msgeo/gromov_hausdorff.hpp"
#include "msgeo/partitions.hpp"

namespace msgeo {

SimpleGraph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) fail("InvalidParams", "graph needs n >= 1 vertices");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail("IndexOutOfRange", "edge endpoint outside 0.." + std::to_string(n - 1));
    if (u == v) fail("InvalidParams", "self loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {n, std::move(edges)};
}

std::vector<std::vector<char>> adjacency(const SimpleGraph& g) {
  std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
  for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
  return adj;
}

SimpleGraph complement(const SimpleGraph& g) {
  auto adj = adjacency(g);
  SimpleGraph c;
  c.n = g.n;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (!adj[u][v]) c.edges.emplace_back(u, v);
  return c;
}

BipartiteGraph make_bipartite(int p, int q, std::vector<std::pair<int, int>> edges) {
  if (p < 1 || q < 1) fail("InvalidParams", "bipartite graph needs p >= 1 and q >= 1");
  for (auto [i, j] : edges) {
    if (i < 0 || i >= p) fail("IndexOutOfRange", "left endpoint " + std::to_string(i));
    if (j < 0 || j >= q) fail("IndexOutOfRange", "right endpoint " + std::to_string(j));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {p, q, std::move(edges)};
}

FiniteMetricSpace graph_space(const SimpleGraph& g, double a, double b) {
  if (!(a > 0.0) || !(a <= b) || !(b <= 2.0 * a))
    fail("InvalidAB", "need 0 < a <= b <= 2a for a two-distance space");
  auto adj = adjacency(g);
  FiniteMetricSpace x;
  x.n = g.n;
  x.labels = default_labels(g.n);
  x.dist.assign(static_cast<size_t>(g.n) * g.n, 0.0);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (u != v) x.at(u, v) = adj[u][v] ? a : b;
  return x;
}

namespace {

double borsuk_diameter(const FiniteMetricSpace& x, int m) {
  if (m < 2 || m > x.n)
    fail("InvalidParams", "part count must satisfy 2 <= m <= n");
  double diam = diameter(x);
  if (!(diam > 0.0)) fail("DegenerateDiameter", "space has zero diameter");
  return diam;
}

}  // namespace

bool borsuk_partitionable(const FiniteMetricSpace& x, int m, double tol) {
  double diam = borsuk_diameter(x, m);
  return for_each_partition_rgs_until(x.n, m, [&](const std::vector<int>& rgs) {
    return partition_stats_rgs(x, rgs, m).diam <= diam - tol;
  });
}

bool borsuk_by_gh(const FiniteMetricSpace& x, int m, double lambda, double tol) {
  double diam = borsuk_diameter(x, m);
  if (!(lambda > 0.0) || !(lambda < diam))
    fail("InvalidParams", "lambda must lie strictly between 0 and the diameter");
  return 2.0 * gh_to_simplex(x, m, lambda) < diam - tol;
}

namespace {

bool has_clique_partition(const SimpleGraph& g, const std::vector<std::vector<char>>& adj,
                          int m) {
  return for_each_partition_rgs_until(g.n, m, [&](const std::vector<int>& rgs) {
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j)
        if (rgs[i] == rgs[j] && !adj[i][j]) return false;
    return true;
  });
}

}  // namespace

int clique_cover_brute(const SimpleGraph& g) {
  auto adj = adjacency(g);
  for (int m = 1; m < g.n; ++m)
    if (has_clique_partition(g, adj, m)) return m;
  return g.n;  // singletons always work
}

namespace {

// Backtracking proper coloring, deliberately independent of the clique
// partition search so the duality check is meaningful.
bool colorable(const std::vector<std::vector<char>>& adj, std::vector<int>& color,
               int v, int m) {
  int n = static_cast<int>(color.size());
  if (v == n) return true;
  int used = 0;
  for (int u = 0; u < v; ++u) used = std::max(used, color[u] + 1);
  // Trying at most one fresh color kills color-permutation symmetry.
  for (int c = 0; c < std::min(m, used + 1); ++c) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (adj[u][v] && color[u] == c) ok = false;
    if (!ok) continue;
    color[v] = c;
    if (colorable(adj, color, v + 1, m)) return true;
  }
  return false;
}

}  // namespace

int chromatic_brute(const SimpleGraph& g) {
  auto adj = adjacency(g);
  std::vector<int> color(g.n, 0);
  for (int m = 1; m < g.n; ++m)
    if (colorable(adj, color, 0, m)) return m;
  return g.n;
}

int clique_cover_by_gh(const SimpleGraph& g, double a, double b) {
  if (!(a > 0.0) || !(a < b) || !(b <= 2.0 * a))
    fail("InvalidAB", "need 0 < a < b <= 2a to separate the two distances");
  FiniteMetricSpace x = graph_space(g, a, b);
  double tol = default_tolerance();
  // 2 d_GH(a simplex_k, X) stays equal to b for k below the cover number and
  // drops strictly under b from there on.
  int m = 0;
  for (int k = 1; k <= g.n; ++k) {
    double v = 2.0 * gh_to_simplex(x, k, a);
    if (std::fabs(v - b) <= tol)
      m = k;
    else
      break;
  }
  return m + 1;
}

int chromatic_by_gh(const SimpleGraph& g, double a, double b) {
  return clique_cover_by_gh(complement(g), a, b);
}

int clique_cover_number(const SimpleGraph& g, double a, double b) {
  if (g.n > 8)
    fail("TooLarge", "combined clique cover computation guarded at 8 vertices");
  int gh = clique_cover_by_gh(g, a, b);
  int brute = clique_cover_brute(g);
  if (gh != brute)
    fail("InternalError", "simplex-distance scan gave " + std::to_string(gh) +
                              " but brute force gave " + std::to_string(brute));
  return gh;
}

int chromatic_number(const SimpleGraph& g, double a, double b) {
  return clique_cover_number(complement(g), a, b);
}

namespace {

// Shared mask-subset counter: how many subsets of the edge list OR to the
// full vertex mask.
uint64_t count_covers(const std::vector<uint64_t>& masks, uint64_t full, bool parallel) {
  const int m = static_cast<int>(masks.size());
  if (m > kEdgeCoverGuard)
    fail("TooLarge",
         "edge cover counting guarded at " + std::to_string(kEdgeCoverGuard) + " edges");
  uint64_t all = 0;
  for (uint64_t e : masks) all |= e;
  if (all != full) return 0;  // some vertex is isolated

  const int m1 = m / 2, m2 = m - m1;
  std::vector<uint64_t> low(size_t{1} << m1, 0), high(size_t{1} << m2, 0);
  for (uint32_t s = 1; s < low.size(); ++s)
    low[s] = low[s & (s - 1)] | masks[std::countr_zero(s)];
  for (uint32_t s = 1; s < high.size(); ++s)
    high[s] = high[s & (s - 1)] | masks[m1 + std::countr_zero(s)];

  uint64_t count = 0;
  const int64_t outer = int64_t{1} << m2;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : count) schedule(static) if (parallel && m >= 16)
#endif
  for (int64_t s2 = 0; s2 < outer; ++s2) {
    uint64_t h = high[s2];
    uint64_t local = 0;
    for (size_t s1 = 0; s1 < low.size(); ++s1)
      if ((low[s1] | h) == full) ++local;
    count += local;
  }
  (void)parallel;
  return count;
}

uint64_t count_covers_naive(const std::vector<uint64_t>& masks, uint64_t full) {
  const int m = static_cast<int>(masks.size());
  if (m > kEdgeCoverGuard)
    fail("TooLarge",
         "edge cover counting guarded at " + std::to_string(kEdgeCoverGuard) + " edges");
  uint64_t count = 0;
  for (uint64_t s = 0; s < (uint64_t{1} << m); ++s) {
    uint64_t covered = 0;
    for (int e = 0; e < m; ++e)
      if (s >> e & 1) covered |= masks[e];
    if (covered == full) ++count;
  }
  return count;
}

std::vector<uint64_t> bipartite_masks(const BipartiteGraph& g) {
  std::vector<uint64_t> masks;
  masks.reserve(g.edges.size());
  for (auto [i, j] : g.edges) masks.push_back(uint64_t{1} << i | uint64_t{1} << (g.p + j));
  return masks;
}

uint64_t full_mask(int bits) {
  if (bits >= 64) fail("TooLarge", "too many vertices for edge cover counting");
  return (uint64_t{1} << bits) - 1;
}

}  // namespace

uint64_t count_edge_covers(const BipartiteGraph& g) {
  return count_covers(bipartite_masks(g), full_mask(g.p + g.q), true);
}

uint64_t count_edge_covers_serial(const BipartiteGraph& g) {
  return count_covers_naive(bipartite_masks(g), full_mask(g.p + g.q));
}

uint64_t count_edge_covers(const SimpleGraph& g) {
  std::vector<uint64_t> masks;
  masks.reserve(g.edges.size());
  for (auto [u, v] : g.edges) masks.push_back(uint64_t{1} << u | uint64_t{1} << v);
  return count_covers(masks, full_mask(g.n), true);
}

namespace {

// C(n, k) for k <= n/2 with n + k bounded by the matching guard; every
// intermediate fits in 64 bits there.
uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  uint64_t r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

uint64_t cycle_matching_count(int m) {
  if (m < 3) fail("MOutOfRange", "cycle length must be >= 3");
  if (m > kMatchingGuard)
    fail("MOutOfRange",
         "cycle length guarded at " + std::to_string(kMatchingGuard) + " to stay exact");
  // Sum over i of m/(m-i) * C(m-i, i), written as C(m-i, i) + C(m-i-1, i-1)
  // to keep every term an integer.
  uint64_t total = 0;
  for (int i = 0; i <= m / 2; ++i)
    total += binomial(m - i, i) + binomial(m - i - 1, i - 1);
  return total;
}

Realization realize_configuration(const BipartiteGraph& g) {
  std::vector<std::vector<int>> nbr(g.q);
  std::vector<int> ldeg(g.p, 0);
  for (auto [i, j] : g.edges) {
    nbr[j].push_back(i);
    ++ldeg[i];
  }
  for (int i = 0; i < g.p; ++i)
    if (ldeg[i] == 0)
      fail("NoEdgeCover", "left vertex " + std::to_string(i) + " is isolated");
  int maxdeg = 0;
  for (int j = 0; j < g.q; ++j) {
    if (nbr[j].empty())
      fail("NoEdgeCover", "right vertex " + std::to_string(j) + " is isolated");
    maxdeg = std::max(maxdeg, static_cast<int>(nbr[j].size()));
  }

  Realization r;
  r.p = g.p;
  r.q = g.q;
  r.dim = g.p + g.q;
  r.big_n = 1 + maxdeg;
  r.left.assign(g.p, std::vector<double>(r.dim, 0.0));
  for (int i = 0; i < g.p; ++i) r.left[i][i] = 1.0;
  r.right.assign(g.q, std::vector<double>(r.dim, 0.0));
  for (int j = 0; j < g.q; ++j) {
    // sqrt(N - deg) on its own axis keeps every edge at sqrt(N-1) and every
    // non-edge at sqrt(N+1).
    r.right[j][g.p + j] = std::sqrt(static_cast<double>(r.big_n - nbr[j].size()));
    for (int i : nbr[j]) r.right[j][i] = 1.0;
  }
  r.r_edge = std::sqrt(static_cast<double>(r.big_n - 1));
  r.r_nonedge = std::sqrt(static_cast<double>(r.big_n + 1));
  return r;
}

}  // namespace msgeo
