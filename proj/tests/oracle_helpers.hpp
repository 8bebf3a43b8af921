#pragma once

// Brute-force reference implementations used only by the tests. Everything
// here trades speed for obviousness and deliberately avoids the library's
// own enumeration strategies, so agreement is meaningful.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "msgeo/common.hpp"
#include "msgeo/metric_space.hpp"

namespace msgeo_test {

// Runs fn and reports the code of the Error it throws ("" if none).
template <typename Fn>
std::string error_code(Fn&& fn) {
  try {
    fn();
  } catch (const msgeo::Error& e) {
    return e.code();
  }
  return "";
}

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// All correspondences between {0..n-1} and {0..m-1}, by filtering the
// 2^(n*m) relations for two-sided surjectivity. Pairs come out sorted.
inline std::vector<std::vector<std::pair<int, int>>> all_correspondences(int n, int m) {
  std::vector<std::vector<std::pair<int, int>>> out;
  const int cells = n * m;
  for (uint32_t mask = 1; mask < (1u << cells); ++mask) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<char> lcov(n, 0), rcov(m, 0);
    for (int c = 0; c < cells; ++c)
      if (mask & (1u << c)) {
        int i = c / m, j = c % m;
        pairs.emplace_back(i, j);
        lcov[i] = rcov[j] = 1;
      }
    if (std::count(lcov.begin(), lcov.end(), 1) == n &&
        std::count(rcov.begin(), rcov.end(), 1) == m)
      out.push_back(std::move(pairs));
  }
  return out;
}

inline double relation_distortion(const msgeo::FiniteMetricSpace& x,
                                  const msgeo::FiniteMetricSpace& y,
                                  const std::vector<std::pair<int, int>>& pairs) {
  double dis = 0.0;
  for (const auto& [i, j] : pairs)
    for (const auto& [k, l] : pairs)
      dis = std::max(dis, std::abs(x.d(i, k) - y.d(j, l)));
  return dis;
}

// Exact GH distance by exhausting every correspondence (not only the
// irreducible ones). Only sensible for very small spaces.
inline double gh_brute(const msgeo::FiniteMetricSpace& x, const msgeo::FiniteMetricSpace& y) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& pairs : all_correspondences(x.n, y.n))
    best = std::min(best, relation_distortion(x, y, pairs));
  return best / 2.0;
}

// A correspondence is irreducible exactly when every related pair has a
// singleton side: removing any pair would then break surjectivity, and
// conversely a pair with both degrees >= 2 is removable.
inline bool is_irreducible_relation(const std::vector<std::pair<int, int>>& pairs, int n,
                                    int m) {
  std::vector<int> ldeg(n, 0), rdeg(m, 0);
  for (const auto& [i, j] : pairs) {
    ++ldeg[i];
    ++rdeg[j];
  }
  for (const auto& [i, j] : pairs)
    if (ldeg[i] > 1 && rdeg[j] > 1) return false;
  return true;
}

inline long long count_irreducible_brute(int n, int m) {
  long long count = 0;
  for (const auto& pairs : all_correspondences(n, m))
    if (is_irreducible_relation(pairs, n, m)) ++count;
  return count;
}

// Edge-cover count by inclusion-exclusion over the forced-uncovered vertex
// set: sum over S of (-1)^|S| * 2^(#edges disjoint from S).
inline long long edge_covers_ie(int p, int q, const std::vector<std::pair<int, int>>& edges) {
  const int verts = p + q;
  long long total = 0;
  for (uint32_t s = 0; s < (1u << verts); ++s) {
    int free_edges = 0;
    for (const auto& [i, j] : edges)
      if (!(s & (1u << i)) && !(s & (1u << (p + j)))) ++free_edges;
    long long term = 1ll << free_edges;
    total += (std::popcount(s) % 2 == 0) ? term : -term;
  }
  return total;
}

// Matchings of an arbitrary small edge list (empty matching included).
inline long long matchings_brute(int nverts, const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  long long count = 0;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<char> used(nverts, 0);
    bool ok = true;
    for (int e = 0; e < m && ok; ++e)
      if (mask & (1u << e)) {
        auto [u, v] = edges[e];
        if (used[u] || used[v]) ok = false;
        used[u] = used[v] = 1;
      }
    if (ok) ++count;
  }
  return count;
}

// Kruskal over the complete distance graph with one edge forced into the
// forest first. Returns the resulting spanning-tree length.
inline double mst_length_with_forced_edge(const msgeo::FiniteMetricSpace& x, int fi, int fj) {
  std::vector<int> parent(x.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  };
  double len = x.d(fi, fj);
  unite(fi, fj);
  std::vector<std::tuple<double, int, int>> order;
  for (int i = 0; i < x.n; ++i)
    for (int j = i + 1; j < x.n; ++j) order.emplace_back(x.d(i, j), i, j);
  std::sort(order.begin(), order.end());
  for (const auto& [d, i, j] : order)
    if (unite(i, j)) len += d;
  return len;
}

// Relation composition: (x,z) related iff some y links them.
inline std::vector<std::pair<int, int>> compose_relations(
    const std::vector<std::pair<int, int>>& r1, const std::vector<std::pair<int, int>>& r2) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [x, y1] : r1)
    for (const auto& [y2, z] : r2)
      if (y1 == y2) out.emplace_back(x, z);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// The space with points renamed by perm: dist'(perm[i], perm[j]) = dist(i, j).
inline msgeo::FiniteMetricSpace permuted_space(const msgeo::FiniteMetricSpace& x,
                                               const std::vector<int>& perm) {
  msgeo::FiniteMetricSpace y;
  y.n = x.n;
  y.labels.resize(x.n);
  y.dist.assign(static_cast<size_t>(x.n) * x.n, 0.0);
  for (int i = 0; i < x.n; ++i) {
    y.labels[perm[i]] = x.labels[i];
    for (int j = 0; j < x.n; ++j) y.at(perm[i], perm[j]) = x.d(i, j);
  }
  return y;
}

// Validated space for colinear points at the given coordinates.
inline msgeo::FiniteMetricSpace line_space(const std::vector<double>& coords) {
  std::vector<std::vector<double>> table(coords.size(),
                                         std::vector<double>(coords.size(), 0.0));
  for (size_t i = 0; i < coords.size(); ++i)
    for (size_t j = 0; j < coords.size(); ++j) table[i][j] = std::abs(coords[i] - coords[j]);
  return msgeo::validate_space(msgeo::default_labels(static_cast<int>(coords.size())), table);
}

inline msgeo::FiniteMetricSpace two_point_space(double d) { return line_space({0.0, d}); }

// Three-point space with the given side lengths (must satisfy the triangle
// inequality).
inline msgeo::FiniteMetricSpace triangle_space(double ab, double ac, double bc) {
  return msgeo::validate_space(msgeo::default_labels(3),
                               {{0.0, ab, ac}, {ab, 0.0, bc}, {ac, bc, 0.0}});
}

}  // namespace msgeo_test
