#include "msgeo/steiner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace msgeo {

std::vector<SteinerTopology> enumerate_topologies(int n) {
  if (n < 2 || n > kNetworkBoundaryGuard)
    fail("NOutOfRange", "topology enumeration needs 2 <= n <= " +
                            std::to_string(kNetworkBoundaryGuard) + ", got " +
                            std::to_string(n));
  std::vector<SteinerTopology> list;
  SteinerTopology base;
  base.n = n;
  base.edges = {{0, 1}};
  list.push_back(base);
  // Attach boundary vertex b by subdividing each edge with a fresh interior
  // vertex; every class in B_n arises exactly once this way.
  for (int b = 2; b < n; ++b) {
    int w = n + (b - 2);
    std::vector<SteinerTopology> next;
    next.reserve(list.size() * (2 * b - 3));
    for (const auto& t : list)
      for (size_t e = 0; e < t.edges.size(); ++e) {
        SteinerTopology s;
        s.n = n;
        s.edges.reserve(t.edges.size() + 2);
        for (size_t f = 0; f < t.edges.size(); ++f)
          if (f != e) s.edges.push_back(t.edges[f]);
        auto [u, v] = t.edges[e];
        s.edges.emplace_back(std::min(u, w), std::max(u, w));
        s.edges.emplace_back(std::min(v, w), std::max(v, w));
        s.edges.emplace_back(std::min(b, w), std::max(b, w));
        std::sort(s.edges.begin(), s.edges.end());
        next.push_back(std::move(s));
      }
    list = std::move(next);
  }
  return list;
}

namespace {

std::vector<int> checked_terminals(const FiniteMetricSpace& x, std::vector<int> m) {
  if (m.empty()) fail("EmptySet", "terminal set M must be non-empty");
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  for (int i : m)
    if (i < 0 || i >= x.n) fail("IndexOutOfRange", "terminal index " + std::to_string(i));
  if (x.n > kSmtAmbientGuard)
    fail("TooLarge", "ambient guarded at " + std::to_string(kSmtAmbientGuard) + " points");
  return m;
}

// Kruskal over a pre-sorted complete edge list restricted to a vertex mask.
struct MaskedMst {
  const std::vector<std::tuple<double, int, int>>* edges;
  int n;
  mutable std::vector<int> parent;

  MaskedMst(const std::vector<std::tuple<double, int, int>>& e, int n_) : edges(&e), n(n_), parent(n_) {}

  double length(uint32_t vmask, int count) const {
    std::iota(parent.begin(), parent.end(), 0);
    double total = 0.0;
    int picked = 0;
    for (const auto& [l, i, j] : *edges) {
      if (!(vmask >> i & 1u) || !(vmask >> j & 1u)) continue;
      int a = find(i), b = find(j);
      if (a == b) continue;
      parent[std::max(a, b)] = std::min(a, b);
      total += l;
      if (++picked == count - 1) break;
    }
    return total;
  }

  int find(int v) const {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
};

SmtResult smt_supersets_impl(const FiniteMetricSpace& x, const std::vector<int>& m,
                             bool parallel) {
  std::vector<int> free;
  {
    std::vector<char> inm(x.n, 0);
    for (int i : m) inm[i] = 1;
    for (int i = 0; i < x.n; ++i)
      if (!inm[i]) free.push_back(i);
  }
  uint32_t base = 0;
  for (int i : m) base |= 1u << i;
  std::vector<std::tuple<double, int, int>> edges;
  for (int i = 0; i < x.n; ++i)
    for (int j = i + 1; j < x.n; ++j) edges.emplace_back(x.d(i, j), i, j);
  std::sort(edges.begin(), edges.end());

  const int f = static_cast<int>(free.size());
  const int64_t total = int64_t{1} << f;
  const int mcount = static_cast<int>(m.size());

  auto vertices_of = [&](int64_t mask) {
    std::vector<int> v = m;
    for (int b = 0; b < f; ++b)
      if (mask >> b & 1) v.push_back(free[b]);
    std::sort(v.begin(), v.end());
    return v;
  };
  auto better = [](double len, const std::vector<int>& v, const SmtResult& best) {
    if (len != best.length) return len < best.length;
    return std::lexicographical_compare(v.begin(), v.end(), best.vertices.begin(),
                                        best.vertices.end());
  };

  auto scan_range = [&](int64_t lo, int64_t hi) {
    SmtResult best;
    best.length = std::numeric_limits<double>::infinity();
    MaskedMst kr(edges, x.n);
    for (int64_t mask = lo; mask < hi; ++mask) {
      uint32_t vmask = base;
      for (int b = 0; b < f; ++b)
        if (mask >> b & 1) vmask |= 1u << free[b];
      int count = mcount + std::popcount(static_cast<uint32_t>(mask & ((int64_t{1} << f) - 1)));
      double len = kr.length(vmask, count);
      if (len < best.length) {
        best.length = len;
        best.vertices = vertices_of(mask);
      } else if (len == best.length) {
        std::vector<int> v = vertices_of(mask);
        if (std::lexicographical_compare(v.begin(), v.end(), best.vertices.begin(),
                                         best.vertices.end()))
          best.vertices = std::move(v);
      }
    }
    return best;
  };

#ifdef _OPENMP
  if (parallel && total > 1024) {
    int threads = omp_get_max_threads();
    std::vector<SmtResult> locals(threads);
    for (auto& l : locals) l.length = std::numeric_limits<double>::infinity();
#pragma omp parallel num_threads(threads)
    {
      int tid = omp_get_thread_num();
      int64_t chunk = (total + threads - 1) / threads;
      int64_t lo = tid * chunk, hi = std::min<int64_t>(total, lo + chunk);
      if (lo < hi) locals[tid] = scan_range(lo, hi);
    }
    SmtResult best = locals[0];
    for (int t = 1; t < threads; ++t)
      if (!locals[t].vertices.empty() && better(locals[t].length, locals[t].vertices, best))
        best = locals[t];
    return best;
  }
#endif
  (void)parallel;
  return scan_range(0, total);
}

}  // namespace

SmtResult smt_by_supersets(const FiniteMetricSpace& ambient, const std::vector<int>& m) {
  return smt_supersets_impl(ambient, checked_terminals(ambient, m), true);
}

SmtResult smt_by_supersets_serial(const FiniteMetricSpace& ambient,
                                  const std::vector<int>& m) {
  return smt_supersets_impl(ambient, checked_terminals(ambient, m), false);
}

namespace {

NetworkResult networks_impl(const FiniteMetricSpace& x, const std::vector<int>& m,
                            bool parallel) {
  const int n = static_cast<int>(m.size());
  if (n > kNetworkBoundaryGuard)
    fail("TooLarge", "network route guarded at #M <= " + std::to_string(kNetworkBoundaryGuard));
  NetworkResult best;
  if (n == 1) return best;  // single terminal, empty tree

  const auto topos = enumerate_topologies(n);
  const int ni = n - 2;  // interior vertices per topology
  const int a = x.n;
  int64_t placements = 1;
  for (int i = 0; i < ni; ++i) placements *= a;
  const int64_t total = static_cast<int64_t>(topos.size()) * placements;

  auto place_of = [&](int64_t rank, std::vector<int>& place) {
    for (int d = 0; d < ni; ++d) {
      place[d] = static_cast<int>(rank % a);
      rank /= a;
    }
  };
  auto length_of = [&](const SteinerTopology& t, const std::vector<int>& place) {
    double len = 0.0;
    for (auto [u, v] : t.edges) {
      int pu = u < n ? m[u] : place[u - n];
      int pv = v < n ? m[v] : place[v - n];
      len += x.d(pu, pv);
    }
    return len;
  };

  auto scan_range = [&](int64_t lo, int64_t hi, double& bl, int64_t& bidx) {
    std::vector<int> place(ni);
    for (int64_t idx = lo; idx < hi; ++idx) {
      const auto& t = topos[idx / placements];
      place_of(idx % placements, place);
      double len = length_of(t, place);
      if (len < bl) {
        bl = len;
        bidx = idx;
      }
    }
  };

  double best_len = std::numeric_limits<double>::infinity();
  int64_t best_idx = -1;
#ifdef _OPENMP
  if (parallel && total > 1024) {
    int threads = omp_get_max_threads();
    std::vector<double> bls(threads, std::numeric_limits<double>::infinity());
    std::vector<int64_t> bis(threads, -1);
#pragma omp parallel num_threads(threads)
    {
      int tid = omp_get_thread_num();
      int64_t chunk = (total + threads - 1) / threads;
      int64_t lo = tid * chunk, hi = std::min<int64_t>(total, lo + chunk);
      if (lo < hi) scan_range(lo, hi, bls[tid], bis[tid]);
    }
    for (int t = 0; t < threads; ++t)
      if (bls[t] < best_len || (bls[t] == best_len && bis[t] != -1 && bis[t] < best_idx)) {
        best_len = bls[t];
        best_idx = bis[t];
      }
  } else
#endif
  {
    (void)parallel;
    scan_range(0, total, best_len, best_idx);
  }

  best.length = best_len;
  best.topology = static_cast<int>(best_idx / placements);
  best.interior.resize(ni);
  place_of(best_idx % placements, best.interior);
  const auto& t = topos[best.topology];
  for (auto [u, v] : t.edges) {
    int pu = u < n ? m[u] : best.interior[u - n];
    int pv = v < n ? m[v] : best.interior[v - n];
    best.edges.emplace_back(std::min(pu, pv), std::max(pu, pv), x.d(pu, pv));
  }
  return best;
}

}  // namespace

NetworkResult smt_by_networks(const FiniteMetricSpace& ambient, const std::vector<int>& m) {
  return networks_impl(ambient, checked_terminals(ambient, m), true);
}

NetworkResult smt_by_networks_serial(const FiniteMetricSpace& ambient,
                                     const std::vector<int>& m) {
  return networks_impl(ambient, checked_terminals(ambient, m), false);
}

}  // namespace msgeo
