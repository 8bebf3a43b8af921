#include "msgeo/gromov_hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "msgeo/partitions.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace msgeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Block statistics of one partition: sizes plus k x k min/max inter-block
// distance matrices (diagonal of mx holds block diameters).
struct PartInfo {
  std::vector<int> rgs;
  std::vector<int> size;
  std::vector<double> mn, mx;
};

PartInfo make_part_info(const FiniteMetricSpace& x, const std::vector<int>& rgs, int k) {
  PartInfo p;
  p.rgs = rgs;
  p.size.assign(k, 0);
  for (int v : rgs) ++p.size[v];
  p.mn.assign(static_cast<size_t>(k) * k, kInf);
  p.mx.assign(static_cast<size_t>(k) * k, 0.0);
  for (int i = 0; i < x.n; ++i)
    for (int j = i + 1; j < x.n; ++j) {
      int bi = rgs[i], bj = rgs[j];
      double v = x.d(i, j);
      p.mn[static_cast<size_t>(bi) * k + bj] = std::min(p.mn[static_cast<size_t>(bi) * k + bj], v);
      p.mn[static_cast<size_t>(bj) * k + bi] = p.mn[static_cast<size_t>(bi) * k + bj];
      p.mx[static_cast<size_t>(bi) * k + bj] = std::max(p.mx[static_cast<size_t>(bi) * k + bj], v);
      p.mx[static_cast<size_t>(bj) * k + bi] = p.mx[static_cast<size_t>(bi) * k + bj];
    }
  for (int b = 0; b < k; ++b) p.mn[static_cast<size_t>(b) * k + b] = 0.0;
  return p;
}

// Best candidate so far; ties resolved toward the earlier enumeration key
// (k, partition of X, partition of Y, bijection order).
struct BestCand {
  double dis = kInf;
  int k = -1, p = -1, q = -1;
  std::vector<int> prgs, qrgs, perm;

  bool better_than(const BestCand& o) const {
    if (dis != o.dis) return dis < o.dis;
    if (k != o.k) return k < o.k;
    if (p != o.p) return p < o.p;
    return q < o.q;
  }
};

// Depth-first over block bijections with the singleton-side constraint,
// growing the distortion incrementally and pruning once it cannot beat the
// current best. Candidates are visited in lexicographic bijection order, so
// the first strict improvement is the earliest witness.
struct PermScan {
  const PartInfo* P;
  const PartInfo* Q;
  int k;
  int pIdx, qIdx, kIdx;
  BestCand* best;
  std::vector<int> perm;
  std::vector<char> used;

  void run() {
    perm.assign(k, -1);
    used.assign(k, 0);
    recurse(0, 0.0);
  }

  void recurse(int depth, double partial) {
    if (partial >= best->dis) return;
    if (depth == k) {
      best->dis = partial;
      best->k = kIdx;
      best->p = pIdx;
      best->q = qIdx;
      best->prgs = P->rgs;
      best->qrgs = Q->rgs;
      best->perm = perm;
      return;
    }
    for (int j = 0; j < k; ++j) {
      if (used[j]) continue;
      if (P->size[depth] > 1 && Q->size[j] > 1) continue;
      double d = std::max(partial, std::max(P->mx[static_cast<size_t>(depth) * k + depth],
                                            Q->mx[static_cast<size_t>(j) * k + j]));
      for (int t = 0; t < depth && d < best->dis; ++t) {
        int jt = perm[t];
        d = std::max(d, P->mx[static_cast<size_t>(t) * k + depth] -
                            Q->mn[static_cast<size_t>(jt) * k + j]);
        d = std::max(d, Q->mx[static_cast<size_t>(jt) * k + j] -
                            P->mn[static_cast<size_t>(t) * k + depth]);
      }
      if (d >= best->dis) continue;
      used[j] = 1;
      perm[depth] = j;
      recurse(depth + 1, d);
      used[j] = 0;
    }
  }
};

Correspondence witness_from(const BestCand& b, int n, int m) {
  Correspondence r;
  r.left_size = n;
  r.right_size = m;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (b.perm[b.prgs[i]] == b.qrgs[j]) r.pairs.emplace_back(i, j);
  return r;
}

GHResult gh_exact_impl(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                       bool parallel) {
  const int n = x.n, m = y.n;
  if (std::max(n, m) > kGhGuard)
    fail("TooLarge",
         "gh_exact guarded at max(n,m) <= " + std::to_string(kGhGuard) + ", got " +
             std::to_string(std::max(n, m)));
  BestCand best;
  for (int k = 1; k <= std::min(n, m); ++k) {
    std::vector<PartInfo> ps, qs;
    for_each_partition_rgs(n, k, [&](const std::vector<int>& rgs) {
      ps.push_back(make_part_info(x, rgs, k));
    });
    for_each_partition_rgs(m, k, [&](const std::vector<int>& rgs) {
      qs.push_back(make_part_info(y, rgs, k));
    });
    const int np = static_cast<int>(ps.size());
    const int nq = static_cast<int>(qs.size());
#ifdef _OPENMP
    if (parallel) {
      std::vector<BestCand> locals;
#pragma omp parallel
      {
#pragma omp single
        locals.assign(omp_get_num_threads(), best);
        BestCand& local = locals[omp_get_thread_num()];
#pragma omp for schedule(static)
        for (int p = 0; p < np; ++p)
          for (int q = 0; q < nq; ++q) {
            PermScan scan{&ps[p], &qs[q], k, p, q, k, &local, {}, {}};
            scan.run();
          }
      }
      for (const BestCand& c : locals)
        if (c.better_than(best)) best = c;
      continue;
    }
#endif
    (void)parallel;
    BestCand local = best;
    for (int p = 0; p < np; ++p)
      for (int q = 0; q < nq; ++q) {
        PermScan scan{&ps[p], &qs[q], k, p, q, k, &local, {}, {}};
        scan.run();
      }
    if (local.better_than(best)) best = local;
  }
  GHResult out;
  out.distance = best.dis / 2.0;
  out.witness = witness_from(best, n, m);
  return out;
}

}  // namespace

GHResult gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  return gh_exact_impl(x, y, true);
}

GHResult gh_exact_serial(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  return gh_exact_impl(x, y, false);
}

double gh_two_point(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  if (x.n != 2 || y.n != 2) fail("WrongCardinality", "gh_two_point needs two 2-point spaces");
  return std::fabs(x.d(0, 1) - y.d(0, 1)) / 2.0;
}

double gh_three_point(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  if (x.n != 3 || y.n != 3) fail("WrongCardinality", "gh_three_point needs two 3-point spaces");
  double rho[3] = {x.d(0, 1), x.d(0, 2), x.d(1, 2)};
  double nu[3] = {y.d(0, 1), y.d(0, 2), y.d(1, 2)};
  std::sort(rho, rho + 3);
  std::sort(nu, nu + 3);
  double best = 0.0;
  for (int i = 0; i < 3; ++i) best = std::max(best, std::fabs(rho[i] - nu[i]));
  return best / 2.0;
}

std::pair<double, double> gh_bounds(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  double dx = diameter(x), dy = diameter(y);
  return {std::fabs(dx - dy) / 2.0, std::max(dx, dy) / 2.0};
}

double gh_to_simplex(const FiniteMetricSpace& x, int m, double lambda) {
  if (m < 1) fail("InvalidParams", "gh_to_simplex needs m >= 1");
  if (lambda < 0.0) fail("InvalidParams", "gh_to_simplex needs lambda >= 0");
  const double dx = diameter(x);
  if (m == 1 || lambda == 0.0) return dx / 2.0;  // lambda*Delta_1 convention
  if (m > x.n) return std::max(lambda, dx - lambda) / 2.0;
  if (m == x.n) return std::max(lambda - eps_min(x), dx - lambda) / 2.0;
  // 2 <= m < #X: minimize max{diam D, lambda - alpha(D), diam X - lambda}.
  double best = kInf;
  for_each_partition_rgs(x.n, m, [&](const std::vector<int>& rgs) {
    PartitionStats st = partition_stats_rgs(x, rgs, m);
    double v = std::max(st.diam, std::max(lambda - st.alpha, dx - lambda));
    best = std::min(best, v);
  });
  return best / 2.0;
}

std::pair<double, double> gh_scaling_check(const FiniteMetricSpace& x,
                                           const FiniteMetricSpace& y, double lambda) {
  if (lambda < 0.0) fail("InvalidParams", "gh_scaling_check needs lambda >= 0");
  double lhs = gh_exact(scale(x, lambda), scale(y, lambda)).distance;
  double rhs = lambda * gh_exact(x, y).distance;
  return {lhs, rhs};
}

FiniteMetricSpace interpolate(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                              const Correspondence& corr, double t, double tol) {
  if (t < 0.0 || t > 1.0) fail("TOutOfRange", "t = " + format_double(t) + " outside [0,1]");
  if (corr.left_size != x.n || corr.right_size != y.n)
    fail("InvalidCorrespondence", "correspondence sizes do not match the spaces");
  validate_correspondence(corr);
  if (t == 0.0) return x;
  if (t == 1.0) return y;

  std::vector<std::pair<int, int>> pairs = corr.pairs;
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  const int np = static_cast<int>(pairs.size());
  std::vector<double> dt(static_cast<size_t>(np) * np, 0.0);
  for (int u = 0; u < np; ++u)
    for (int v = u + 1; v < np; ++v) {
      double d = (1.0 - t) * x.d(pairs[u].first, pairs[v].first) +
                 t * y.d(pairs[u].second, pairs[v].second);
      dt[static_cast<size_t>(u) * np + v] = dt[static_cast<size_t>(v) * np + u] = d;
    }

  // Quotient pairs at distance <= tol; iterate so chained collisions collapse
  // into one class.
  std::vector<int> parent(np);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < np; ++u)
      for (int v = u + 1; v < np; ++v) {
        int ru = find(u), rv = find(v);
        if (ru != rv && dt[static_cast<size_t>(ru) * np + rv] <= tol) {
          parent[std::max(ru, rv)] = std::min(ru, rv);
          changed = true;
        }
      }
  }
  std::vector<int> reps;
  for (int u = 0; u < np; ++u)
    if (find(u) == u) reps.push_back(u);

  FiniteMetricSpace z;
  z.n = static_cast<int>(reps.size());
  z.labels.reserve(z.n);
  for (int r : reps)
    z.labels.push_back(x.labels[pairs[r].first] + "|" + y.labels[pairs[r].second]);
  {
    std::set<std::string> seen(z.labels.begin(), z.labels.end());
    if (static_cast<int>(seen.size()) != z.n) z.labels = default_labels(z.n);
  }
  z.dist.resize(static_cast<size_t>(z.n) * z.n);
  for (int u = 0; u < z.n; ++u)
    for (int v = 0; v < z.n; ++v)
      z.at(u, v) = dt[static_cast<size_t>(reps[u]) * np + reps[v]];
  return z;
}

}  // namespace msgeo
